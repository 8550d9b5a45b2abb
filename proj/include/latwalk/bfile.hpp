#pragma once

// OEIS b-file text: one "index value" pair per line, '#' comment lines.

#include <string>
#include <string_view>
#include <vector>

#include "latwalk/numeric.hpp"

namespace latwalk {

struct BFileEntry {
  long index;
  Count value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<BFileEntry> entries;    // strictly increasing indices

  friend bool operator==(const BFile&, const BFile&) = default;
};

/// Offset 0, one entry per line, no comments.
std::string bfile_emit(const CountTable& table);
std::string bfile_emit(const std::vector<Count>& values);
std::string bfile_format(const BFile& file);

/// Throws FormatError whose position() is the 1-based line number.
BFile bfile_parse(std::string_view text);

}  // namespace latwalk
