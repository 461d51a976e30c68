#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bisetkit/cache.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace fs = std::filesystem;

namespace {

std::mutex dir_mtx;
std::optional<std::string> explicit_dir;
std::atomic<std::size_t> hit_count{0};

fs::path entry_path(std::string const &dir, Group const &g)
{
  std::ostringstream os;
  os << std::hex << g.table_hash() << ".json";
  return fs::path(dir) / os.str();
}

} // anonymous namespace

std::optional<std::string> cache_dir()
{
  {
    std::lock_guard<std::mutex> lock(dir_mtx);
    if (explicit_dir)
      return explicit_dir;
  }
  if (char const *env = std::getenv("BISETKIT_CACHE_DIR"); env && *env)
    return std::string(env);
  return std::nullopt;
}

void set_cache_dir(std::optional<std::string> dir)
{
  std::lock_guard<std::mutex> lock(dir_mtx);
  explicit_dir = std::move(dir);
}

std::optional<std::vector<std::vector<int>>> load_cached_subgroups(Group const &g)
{
  auto dir = cache_dir();
  if (!dir)
    return std::nullopt;

  std::ifstream in(entry_path(*dir, g));
  if (!in)
    return std::nullopt;

  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || j.value("order", 0ul) != g.order())
    return std::nullopt;

  std::ostringstream hs;
  hs << std::hex << g.table_hash();
  if (j.value("hash", std::string()) != hs.str())
    return std::nullopt;

  ++hit_count;
  return j.at("subgroups").get<std::vector<std::vector<int>>>();
}

void store_cached_subgroups(Group const &g, SubgroupTable const &tab)
{
  auto dir = cache_dir();
  if (!dir)
    return;

  std::error_code ec;
  fs::create_directories(*dir, ec);
  if (ec)
    return;

  std::ostringstream hs;
  hs << std::hex << g.table_hash();

  nlohmann::json j;
  j["hash"] = hs.str();
  j["order"] = g.order();

  std::vector<std::vector<int>> subs;
  std::vector<int> fusion;
  std::vector<bool> normal;
  for (auto const &s : tab.all()) {
    subs.push_back(s.elements);
    fusion.push_back(s.class_index);
    normal.push_back(s.normal);
  }
  std::vector<int> norm_orders;
  for (std::size_t c = 0; c < tab.class_count(); ++c)
    norm_orders.push_back(tab.subgroup_class(static_cast<int>(c)).normalizer_order);

  j["subgroups"] = subs;
  j["fusion"] = fusion;
  j["normal_flags"] = normal;
  j["normalizer_orders"] = norm_orders;
  j["moebius_whole"] = tab.moebius_to(tab.whole());

  auto path = entry_path(*dir, g);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      return;
    out << j.dump();
  }
  fs::rename(tmp, path, ec);
}

CacheStats cache_stats()
{
  CacheStats st;
  st.hits = hit_count.load();
  auto dir = cache_dir();
  if (!dir)
    return st;

  st.dir = *dir;
  std::error_code ec;
  if (!fs::is_directory(*dir, ec))
    return st;

  for (auto const &e : fs::directory_iterator(*dir, ec)) {
    if (e.path().extension() != ".json")
      continue;
    ++st.entries;
    st.bytes += e.file_size();
  }
  return st;
}

std::size_t cache_clear()
{
  auto dir = cache_dir();
  if (!dir)
    return 0;

  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(*dir, ec))
    return 0;

  std::vector<fs::path> victims;
  for (auto const &e : fs::directory_iterator(*dir, ec))
    if (e.path().extension() == ".json")
      victims.push_back(e.path());
  for (auto const &p : victims)
    if (fs::remove(p, ec))
      ++removed;
  return removed;
}

bool spot_check_table(Group const &g, std::mt19937_64 &rng)
{
  auto const &tab = g.subgroups();
  std::uniform_int_distribution<std::size_t> pick(0, tab.size() - 1);

  auto const &s = tab[static_cast<int>(pick(rng))];
  if (!g.is_subgroup(s.set) || g.closure(s.generators) != s.set)
    return false;

  std::uniform_int_distribution<std::size_t> pick_class(0, tab.class_count() - 1);
  auto const &cls = tab.subgroup_class(static_cast<int>(pick_class(rng)));
  auto const &rep = tab[cls.rep];

  std::vector<int> members;
  for (std::size_t x = 0; x < g.order(); ++x) {
    int j = tab.find(g.conjugate(static_cast<int>(x), rep.set));
    if (j < 0)
      return false;
    members.push_back(j);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  return members == cls.members &&
         static_cast<std::size_t>(cls.normalizer_order) * members.size() == g.order();
}

} // namespace bisetkit
