#pragma once

#include <cstddef>
#include <filesystem>
#include <string_view>

namespace schurforge {

inline constexpr std::string_view kCacheHeader = "SCHURFORGE-CACHE v1";

struct CacheStats {
  std::size_t lr_records = 0;
  std::size_t kostka_records = 0;
  std::size_t total() const { return lr_records + kostka_records; }
};

// Counts currently held in the in-process memo tables.
CacheStats memo_stats();

void memo_clear();

// Merge a cache file into the memo tables. Throws std::runtime_error on a
// bad header or malformed record. Returns the number of records read.
CacheStats load_cache_file(const std::filesystem::path& file);

// Write the memo tables to `file`: header line, then one sorted record per
// line (`LR <l> <m> <n> <value>` / `KOSTKA <l> <m> <value>`). The write is
// atomic: a temp file in the same directory is renamed over the target.
CacheStats save_cache_file(const std::filesystem::path& file);

} // namespace schurforge
