#include "latwalk/bfile.hpp"

#include <cctype>
#include <string>

namespace latwalk {

std::string bfile_emit(const std::vector<Count>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += values[i].get_str();
    out += '\n';
  }
  return out;
}

std::string bfile_emit(const CountTable& table) { return bfile_emit(table.values); }

std::string bfile_format(const BFile& file) {
  std::string out;
  for (const auto& c : file.comments) out += "#" + c + "\n";
  for (const auto& e : file.entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.get_str();
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = s.front() == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BFile bfile_parse(std::string_view text) {
  BFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      file.comments.emplace_back(line.substr(1));
      continue;
    }
    const std::size_t gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": expected \"index value\"",
                        line_no);
    }
    const std::string_view index_text = line.substr(0, gap);
    const std::string_view value_text = trim(line.substr(gap));
    if (!is_integer_token(index_text) || !is_integer_token(value_text) || index_text.size() > 18) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": malformed entry \"" +
                            std::string(line) + "\"",
                        line_no);
    }
    const long index = std::stol(std::string(index_text));
    if (!file.entries.empty() && index <= file.entries.back().index) {
      throw FormatError("b-file line " + std::to_string(line_no) + ": index " +
                            std::to_string(index) + " does not increase",
                        line_no);
    }
    file.entries.push_back({index, Count(std::string(value_text), 10)});
  }
  return file;
}

}  // namespace latwalk
