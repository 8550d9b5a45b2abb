#include "latwalk/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace latwalk {
namespace {

const std::map<std::string, const char*>& bundled() {
  static const std::map<std::string, const char*> table{
#include "oeis_fixtures.inc"
  };
  return table;
}

bool valid_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string download(std::string_view id) {
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(5);
  client.set_read_timeout(10);
  const std::string url = "/" + std::string(id) + "/" + bfile_name(id);
  auto response = client.Get(url);
  if (!response || response->status != 200) {
    throw NotFoundError("could not download " + url + " from oeis.org");
  }
  return response->body;
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "latwalk" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "latwalk" / "oeis";
  }
  return std::filesystem::temp_directory_path() / "latwalk-oeis";
}

std::vector<std::string> bundled_sequence_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, text] : bundled()) ids.push_back(id);
  return ids;
}

const char* source_name(OeisSource source) {
  switch (source) {
    case OeisSource::Cache: return "cache";
    case OeisSource::Bundled: return "bundled";
    case OeisSource::Network: return "network";
  }
  return "?";
}

OeisResult oeis_fetch(std::string_view id, const OeisOptions& options) {
  if (!valid_id(id)) throw NotFoundError("\"" + std::string(id) + "\" is not an OEIS A-number");
  const std::filesystem::path cache_dir =
      options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
  const std::filesystem::path cached = cache_dir / bfile_name(id);

  if (options.allow_network) {
    const std::string text = download(id);
    BFile file = bfile_parse(text);
    write_file(cached, text);
    return {std::move(file), OeisSource::Network};
  }
  if (std::filesystem::exists(cached)) return {bfile_parse(read_file(cached)), OeisSource::Cache};

  const auto it = bundled().find(std::string(id));
  if (it == bundled().end()) {
    throw NotFoundError("no cached or bundled b-file for " + std::string(id) +
                        " (network fetching is disabled)");
  }
  BFile file = bfile_parse(it->second);
  write_file(cached, it->second);
  return {std::move(file), OeisSource::Bundled};
}

OeisComparison compare_with_oeis(const std::string& id, const BFile& file,
                                 const std::string& target, const std::vector<Count>& ours) {
  auto compare_at = [&](long shift) {
    OeisComparison cmp;
    cmp.id = id;
    cmp.target = target;
    cmp.aligned = true;
    cmp.shift = shift;
    for (const auto& e : file.entries) {
      const long n = e.index + shift;
      if (n < 1 || n >= static_cast<long>(ours.size())) continue;
      ++cmp.compared;
      if (e.value != ours[static_cast<std::size_t>(n)]) {
        if (cmp.mismatches == 0) cmp.first_mismatch_index = e.index;
        ++cmp.mismatches;
      }
    }
    return cmp;
  };

  OeisComparison best;
  best.id = id;
  best.target = target;
  if (ours.size() < 2) return best;
  // Sequences like 1, 1, 5, ... offer several entries equal to ours[1]; the
  // first one that matches throughout wins, else the first candidate.
  for (const auto& e : file.entries) {
    if (e.value != ours[1]) continue;
    OeisComparison cmp = compare_at(1 - e.index);
    if (cmp.matched()) return cmp;
    if (!best.aligned) best = std::move(cmp);
  }
  return best;
}

}  // namespace latwalk
