#pragma once

#include <string>

namespace rootmult {

// Directory-backed persistence of the Stirling triangles and the character
// memo table. Files are plain text, one entry per line, key TAB value:
//   stirling.tsv    s1:<n>:<k> or s2:<n>:<k> keyed rows
//   characters.tsv  <lambda>|<rho> keyed values, partitions comma-serialized
inline constexpr const char* kCacheDirEnvVar = "ROOTMULT_CACHE_DIR";

// Loads both tables from the directory named by ROOTMULT_CACHE_DIR, if the
// variable is set and the files exist. Returns the directory used ("" if
// unset). Malformed lines are skipped.
std::string load_caches_from_env();

// Writes both tables to the directory named by ROOTMULT_CACHE_DIR, creating
// it if needed. No-op when the variable is unset. Returns the directory used.
std::string save_caches_to_env();

void load_caches_from_dir(const std::string& dir);
void save_caches_to_dir(const std::string& dir);

}  // namespace rootmult
