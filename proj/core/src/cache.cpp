#include "schurforge/cache.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "memo_tables.hpp"

namespace schurforge {

using detail::memo_tables;
using detail::PairKey;
using detail::TripleKey;

CacheStats memo_stats() {
  auto& tables = memo_tables();
  CacheStats stats;
  {
    std::shared_lock lock(tables.lr_mutex);
    stats.lr_records = tables.lr.size();
  }
  {
    std::shared_lock lock(tables.kostka_mutex);
    stats.kostka_records = tables.kostka.size();
  }
  return stats;
}

void memo_clear() {
  auto& tables = memo_tables();
  {
    std::unique_lock lock(tables.lr_mutex);
    tables.lr.clear();
  }
  {
    std::unique_lock lock(tables.kostka_mutex);
    tables.kostka.clear();
  }
}

CacheStats load_cache_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open cache file: " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader)
    throw std::runtime_error("bad cache header in " + file.string());

  auto& tables = memo_tables();
  CacheStats stats;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    auto read_partition = [&]() {
      std::string token;
      if (!(fields >> token)) throw std::runtime_error("truncated cache record");
      return Partition::parse(token);
    };
    auto read_value = [&]() {
      std::string token;
      if (!(fields >> token)) throw std::runtime_error("truncated cache record");
      return ExactInt(token);
    };
    try {
      if (kind == "LR") {
        TripleKey key{read_partition(), read_partition(), read_partition()};
        ExactInt value = read_value();
        std::unique_lock lock(tables.lr_mutex);
        tables.lr.emplace(std::move(key), std::move(value));
        ++stats.lr_records;
      } else if (kind == "KOSTKA") {
        PairKey key{read_partition(), read_partition()};
        ExactInt value = read_value();
        std::unique_lock lock(tables.kostka_mutex);
        tables.kostka.emplace(std::move(key), std::move(value));
        ++stats.kostka_records;
      } else {
        throw std::runtime_error("unknown record kind '" + kind + "'");
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(file.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return stats;
}

CacheStats save_cache_file(const std::filesystem::path& file) {
  auto& tables = memo_tables();
  std::vector<std::pair<TripleKey, ExactInt>> lr_records;
  std::vector<std::pair<PairKey, ExactInt>> kostka_records;
  {
    std::shared_lock lock(tables.lr_mutex);
    lr_records.assign(tables.lr.begin(), tables.lr.end());
  }
  {
    std::shared_lock lock(tables.kostka_mutex);
    kostka_records.assign(tables.kostka.begin(), tables.kostka.end());
  }
  auto triple_less = [](const auto& x, const auto& y) {
    if (x.first.a != y.first.a) return x.first.a < y.first.a;
    if (x.first.b != y.first.b) return x.first.b < y.first.b;
    return x.first.c < y.first.c;
  };
  auto pair_less = [](const auto& x, const auto& y) {
    if (x.first.a != y.first.a) return x.first.a < y.first.a;
    return x.first.b < y.first.b;
  };
  std::sort(lr_records.begin(), lr_records.end(), triple_less);
  std::sort(kostka_records.begin(), kostka_records.end(), pair_less);

  std::filesystem::create_directories(file.parent_path());
  std::filesystem::path temp = file;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + temp.string());
    out << kCacheHeader << '\n';
    for (const auto& [key, value] : kostka_records)
      out << "KOSTKA " << key.a.to_string() << ' ' << key.b.to_string() << ' '
          << decimal_string(value) << '\n';
    for (const auto& [key, value] : lr_records)
      out << "LR " << key.a.to_string() << ' ' << key.b.to_string() << ' '
          << key.c.to_string() << ' ' << decimal_string(value) << '\n';
    if (!out.flush()) throw std::runtime_error("failed flushing cache file: " + temp.string());
  }
  std::filesystem::rename(temp, file);
  CacheStats stats;
  stats.lr_records = lr_records.size();
  stats.kostka_records = kostka_records.size();
  return stats;
}

} // namespace schurforge
