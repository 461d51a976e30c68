#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "bisetkit/errors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/rational.hpp"

namespace bisetkit {

namespace {

// Extends gens[i] -> imgs[i] to the subgroup generated by the prefix; empty on conflict.
bool extend(Group const &g, Group const &h,
            std::vector<int> const &gens, std::vector<int> const &imgs,
            std::vector<int> &map)
{
  map.assign(g.order(), -1);
  std::vector<bool> used(h.order(), false);
  map[0] = 0;
  used[0] = true;

  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      int y = g.mul(x, gens[j]);
      int fy = h.mul(map[x], imgs[j]);
      if (map[y] == -1) {
        if (used[fy])
          return false;
        map[y] = fy;
        used[fy] = true;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }

  return true;
}

void search(Group const &g, Group const &h, bool all,
            std::function<void(std::vector<int> const &)> const &found)
{
  if (g.order() != h.order())
    return;
  if (invariant_key(g) != invariant_key(h))
    return;

  auto const &gens = g.small_generators();
  if (gens.empty()) {
    found({0});
    return;
  }

  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int x = gens[i];
    int cs = g.class_sizes()[g.class_of(x)];
    for (std::size_t y = 0; y < h.order(); ++y)
      if (h.element_order(static_cast<int>(y)) == g.element_order(x) &&
          h.class_sizes()[h.class_of(static_cast<int>(y))] == cs)
        cands[i].push_back(static_cast<int>(y));
  }

  std::vector<int> imgs;
  std::vector<int> map;
  bool done = false;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (done)
      return;
    if (i == gens.size()) {
      if (extend(g, h, gens, imgs, map)) {
        found(map);
        if (!all)
          done = true;
      }
      return;
    }
    for (int y : cands[i]) {
      imgs.push_back(y);
      std::vector<int> dummy;
      if (extend(g, h, std::vector<int>(gens.begin(), gens.begin() + i + 1), imgs, dummy))
        rec(i + 1);
      imgs.pop_back();
      if (done)
        return;
    }
  };

  rec(0);
}

std::string map_key(std::vector<int> const &m)
{
  std::string s;
  s.reserve(m.size() * 2);
  for (int x : m) {
    s.push_back(static_cast<char>(x & 0xff));
    s.push_back(static_cast<char>(x >> 8));
  }
  return s;
}

} // anonymous namespace

std::string invariant_key(Group const &g)
{
  std::map<std::pair<int, int>, int> hist;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    ++hist[{g.element_order(g.class_reps()[c]), g.class_sizes()[c]}];

  std::ostringstream os;
  os << g.order() << ";" << g.is_abelian() << ";" << g.center().count() << ";"
     << g.derived_subgroup().count() << ";";
  for (auto [k, v] : hist)
    os << k.first << "/" << k.second << ":" << v << ",";
  return os.str();
}

std::optional<std::vector<int>> find_isomorphism(Group const &g, Group const &h)
{
  std::optional<std::vector<int>> res;
  search(g, h, false, [&](std::vector<int> const &m) { res = m; });
  return res;
}

bool is_isomorphic(Group const &g, Group const &h)
{ return find_isomorphism(g, h).has_value(); }

std::vector<std::vector<int>> all_isomorphisms(Group const &g, Group const &h)
{
  std::vector<std::vector<int>> res;
  search(g, h, true, [&](std::vector<int> const &m) { res.push_back(m); });
  return res;
}

AutomorphismGroup::AutomorphismGroup(Group const &g)
{
  _autos = all_isomorphisms(g, g);
  std::sort(_autos.begin(), _autos.end());

  for (std::size_t i = 0; i < _autos.size(); ++i)
    _index.emplace(map_key(_autos[i]), static_cast<int>(i));

  std::vector<int> inner;
  std::vector<bool> is_inner(_autos.size(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<int> m(g.order());
    for (std::size_t y = 0; y < g.order(); ++y)
      m[y] = g.conj(static_cast<int>(x), static_cast<int>(y));
    int a = find(m);
    if (a < 0)
      throw ConsistencyError("inner automorphism missing from Aut");
    if (!is_inner[a]) {
      is_inner[a] = true;
      inner.push_back(a);
    }
  }
  _inner_count = inner.size();

  _out_of.assign(_autos.size(), -1);
  for (std::size_t a = 0; a < _autos.size(); ++a) {
    if (_out_of[a] != -1)
      continue;
    int c = static_cast<int>(_out_reps.size());
    _out_reps.push_back(static_cast<int>(a));
    for (int i : inner)
      _out_of[compose(static_cast<int>(a), i)] = c;
  }

  std::size_t k = _out_reps.size();
  _out_table.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      _out_table[a * k + b] = _out_of[compose(_out_reps[a], _out_reps[b])];
}

int AutomorphismGroup::find(std::vector<int> const &images) const
{
  auto it = _index.find(map_key(images));
  return it == _index.end() ? -1 : it->second;
}

int AutomorphismGroup::compose(int a, int b) const
{
  auto const &A = _autos[a];
  auto const &B = _autos[b];
  std::vector<int> m(A.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    m[x] = A[B[x]];
  return find(m);
}

int AutomorphismGroup::inverse(int a) const
{
  auto const &A = _autos[a];
  std::vector<int> m(A.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    m[A[x]] = static_cast<int>(x);
  return find(m);
}

int AutomorphismGroup::out_inv(int a) const
{
  for (std::size_t b = 0; b < out_size(); ++b)
    if (out_mul(a, static_cast<int>(b)) == 0)
      return static_cast<int>(b);
  throw ConsistencyError("Out table has no inverse");
}

namespace {

std::string abelian_label(Group const &g)
{
  int n = static_cast<int>(g.order());
  if (n == 1)
    return "C1";

  // partitions of the p-primary parts
  std::vector<std::vector<int>> parts;
  std::vector<int> primes = prime_factors(n);
  for (int p : primes) {
    std::vector<int> rank_at{0};
    long pk = 1;
    int pn = p_part(n, p);
    while (pk < pn) {
      pk *= p;
      int cnt = 0;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (pk % g.element_order(static_cast<int>(x)) == 0)
          ++cnt;
      int r = 0;
      while (cnt > 1) {
        cnt /= p;
        ++r;
      }
      rank_at.push_back(r);
    }
    // number of cyclic factors of order >= p^k
    std::vector<int> lambda;
    for (std::size_t k = 1; k < rank_at.size(); ++k) {
      int d = rank_at[k] - rank_at[k - 1];
      for (int j = 0; j < d; ++j) {
        if (static_cast<int>(lambda.size()) <= j)
          lambda.push_back(0);
        ++lambda[j];
      }
    }
    parts.push_back(lambda);
  }

  std::size_t nf = 0;
  for (auto const &l : parts)
    nf = std::max(nf, l.size());

  std::vector<long> factors(nf, 1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < parts[i].size(); ++j)
      for (int e = 0; e < parts[i][j]; ++e)
        factors[j] *= primes[i];

  std::sort(factors.begin(), factors.end());
  std::string s;
  for (auto f : factors) {
    if (!s.empty())
      s += "x";
    s += "C" + std::to_string(f);
  }
  return s;
}

struct Registry
{
  std::recursive_mutex mtx;
  std::vector<GroupPtr> reps;
  std::vector<std::string> labels;
  std::map<std::string, std::vector<int>> buckets;
  std::map<std::string, int> fallback_count;
  std::map<std::string, GroupPtr> library;
};

Registry &registry()
{
  static Registry r;
  return r;
}

std::string compute_label(Registry &r, Group const &g, std::string const &key)
{
  if (g.is_abelian())
    return abelian_label(g);

  for (auto const &name : library_names()) {
    auto it = r.library.find(name);
    if (it == r.library.end())
      it = r.library.emplace(name, make_named(name)).first;
    auto const &lib = *it->second;
    if (lib.order() == g.order() && !lib.is_abelian() && is_isomorphic(g, lib))
      return name;
  }

  std::ostringstream os;
  os << "G" << g.order() << "_" << std::hex << (std::hash<std::string>{}(key) & 0xffffff);
  std::string base = os.str();
  int k = r.fallback_count[base]++;
  return k == 0 ? base : base + "_" + std::to_string(k);
}

} // anonymous namespace

int iso_type(Group const &g)
{
  auto &r = registry();
  auto key = invariant_key(g);

  std::lock_guard<std::recursive_mutex> lock(r.mtx);
  auto &bucket = r.buckets[key];
  for (int id : bucket)
    if (is_isomorphic(g, *r.reps[id]))
      return id;

  int id = static_cast<int>(r.reps.size());
  r.reps.push_back(g.ptr());
  r.labels.push_back(compute_label(r, g, key));
  r.buckets[key].push_back(id);
  return id;
}

GroupPtr iso_type_rep(int id)
{
  auto &r = registry();
  std::lock_guard<std::recursive_mutex> lock(r.mtx);
  return r.reps.at(id);
}

std::string iso_label(int id)
{
  auto &r = registry();
  std::lock_guard<std::recursive_mutex> lock(r.mtx);
  return r.labels.at(id);
}

std::string iso_label(Group const &g)
{ return iso_label(g.iso_id()); }

} // namespace bisetkit
