#pragma once

// OEIS b-files: bundled fixtures, an on-disk cache, and optional network
// refresh. Tests never touch the network; the bundled copies are served when
// nothing is cached.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "latwalk/bfile.hpp"
#include "latwalk/core.hpp"

namespace latwalk {

/// Environment variable that overrides the cache directory.
inline constexpr const char* kCacheDirEnv = "LATWALK_CACHE_DIR";

enum class OeisSource { Cache, Bundled, Network };

struct OeisOptions {
  std::filesystem::path cache_dir;
  bool allow_network = false;
};

struct OeisResult {
  BFile file;
  OeisSource source;
};

/// $LATWALK_CACHE_DIR, else $XDG_CACHE_HOME/latwalk/oeis, else
/// ~/.cache/latwalk/oeis.
std::filesystem::path default_cache_dir();

std::vector<std::string> bundled_sequence_ids();

/// Cache first, then the bundled fixture (copied into the cache). With
/// allow_network the live b-file is downloaded first and replaces the cache.
/// Throws NotFoundError for malformed or unknown ids.
OeisResult oeis_fetch(std::string_view id, const OeisOptions& options);

const char* source_name(OeisSource source);

/// Offset-aligned comparison of an OEIS sequence against one of ours
/// (indexed by semilength from 0).
struct OeisComparison {
  std::string id;
  std::string target;
  bool aligned = false;
  long shift = 0;  // our index = b-file index + shift
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  long first_mismatch_index = -1;

  bool matched() const { return aligned && compared > 0 && mismatches == 0; }
};

/// Aligns the b-file so that an entry equal to ours[1] sits at n = 1 (the
/// first such entry that matches throughout, else the first one), then
/// compares every entry landing on 1 <= n < ours.size().
OeisComparison compare_with_oeis(const std::string& id, const BFile& file,
                                 const std::string& target, const std::vector<Count>& ours);

}  // namespace latwalk
