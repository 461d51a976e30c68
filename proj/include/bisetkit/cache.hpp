#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "group.hpp"

namespace bisetkit {

class SubgroupTable;

/** Directory for cached subgroup tables: the explicit setting, else $BISETKIT_CACHE_DIR. */
std::optional<std::string> cache_dir();
void set_cache_dir(std::optional<std::string> dir);

std::optional<std::vector<std::vector<int>>> load_cached_subgroups(Group const &g);
void store_cached_subgroups(Group const &g, SubgroupTable const &tab);

struct CacheStats
{
  std::string dir;
  std::size_t entries = 0;
  std::size_t bytes = 0;
  std::size_t hits = 0;
};

CacheStats cache_stats();
std::size_t cache_clear();

// Recomputes one randomly chosen subgroup and class of the table from scratch.
bool spot_check_table(Group const &g, std::mt19937_64 &rng);

} // namespace bisetkit
