#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "bisetkit/config.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/rational.hpp"
#include "bisetkit/sections.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

struct PermHash
{
  std::size_t operator()(Perm const &p) const
  {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p)
      h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

Perm compose(Perm const &a, Perm const &b)
{
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[b[i]];
  return r;
}

} // anonymous namespace

struct Group::Lazy
{
  std::unordered_map<Perm, int, PermHash> index;

  std::once_flag subgroups_once;
  std::unique_ptr<SubgroupTable> subgroups;

  std::once_flag sections_once;
  std::unique_ptr<SectionTable> sections;

  std::once_flag autos_once;
  std::unique_ptr<AutomorphismGroup> autos;

  std::once_flag small_gens_once;
  std::vector<int> small_gens;

  std::atomic<int> iso_id{-1};

  std::mutex memo_mtx;
  std::map<std::string, std::shared_ptr<void const>> memo;
};

Group::~Group() = default;

GroupPtr Group::generate(std::vector<Perm> generators, std::string name)
{
  unsigned degree = 1;
  for (auto const &g : generators)
    degree = std::max<unsigned>(degree, static_cast<unsigned>(g.size()));

  for (auto &g : generators) {
    if (g.size() != degree) {
      if (g.empty())
        throw DomainError("empty permutation");
      // pad with fixed points
      auto old = g.size();
      g.resize(degree);
      std::iota(g.begin() + old, g.end(), static_cast<std::uint16_t>(old));
    }
    std::vector<bool> seen(degree, false);
    for (auto x : g) {
      if (x >= degree || seen[x])
        throw DomainError("generator is not a permutation");
      seen[x] = true;
    }
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> elems{id};
  seen.emplace(id, 0);

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const &g : generators) {
      Perm p = compose(elems[i], g);
      if (seen.count(p))
        continue;
      seen.emplace(p, static_cast<int>(elems.size()));
      elems.push_back(std::move(p));
      if (elems.size() > order_bound())
        throw ResourceError("group order exceeds the bound of " + std::to_string(order_bound()));
    }
  }

  std::sort(elems.begin(), elems.end());

  auto grp = std::shared_ptr<Group>(new Group());
  grp->_degree = degree;
  grp->_name = std::move(name);
  grp->_lazy = std::make_unique<Lazy>();

  std::size_t n = elems.size();
  for (std::size_t i = 0; i < n; ++i)
    grp->_lazy->index.emplace(elems[i], static_cast<int>(i));

  grp->_elements = std::move(elems);

  auto &E = grp->_elements;
  auto &idx = grp->_lazy->index;

  grp->_mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      grp->_mult[a * n + b] = idx.at(compose(E[a], E[b]));

  grp->_inv.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (grp->_mult[a * n + b] == 0) {
        grp->_inv[a] = static_cast<int>(b);
        break;
      }

  grp->_element_orders.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    int x = static_cast<int>(a);
    while (x != 0) {
      x = grp->_mult[x * n + a];
      ++k;
    }
    grp->_element_orders[a] = k;
  }

  for (auto const &g : generators) {
    int i = idx.at(g);
    if (i != 0 && std::find(grp->_generators.begin(), grp->_generators.end(), i) == grp->_generators.end())
      grp->_generators.push_back(i);
  }

  grp->_class_of.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (grp->_class_of[x] != -1)
      continue;
    int c = static_cast<int>(grp->_class_reps.size());
    grp->_class_reps.push_back(static_cast<int>(x));
    int size = 0;
    for (std::size_t g = 0; g < n; ++g) {
      int y = grp->conj(static_cast<int>(g), static_cast<int>(x));
      if (grp->_class_of[y] == -1) {
        grp->_class_of[y] = c;
        ++size;
      }
    }
    grp->_class_sizes.push_back(size);
  }

  return grp;
}

int Group::index_of(Perm const &p) const
{
  auto it = _lazy->index.find(p);
  return it == _lazy->index.end() ? -1 : it->second;
}

int Group::exponent() const
{
  long e = 1;
  for (auto o : _element_orders)
    e = lcm(e, o);
  return static_cast<int>(e);
}

std::vector<int> const &Group::small_generators() const
{
  std::call_once(_lazy->small_gens_once, [this] {
    std::vector<int> cand(order());
    std::iota(cand.begin(), cand.end(), 0);
    std::stable_sort(cand.begin(), cand.end(), [this](int a, int b) {
      return _element_orders[a] > _element_orders[b];
    });

    std::vector<int> gens;
    ElementSet cur = trivial();
    for (int x : cand) {
      if (cur.count() == order())
        break;
      if (cur.contains(x))
        continue;
      gens.push_back(x);
      cur = closure(gens);
    }
    _lazy->small_gens = std::move(gens);
  });
  return _lazy->small_gens;
}

bool Group::is_abelian() const
{
  for (int a : _generators)
    for (int b : _generators)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

bool Group::is_cyclic() const
{
  return std::any_of(_element_orders.begin(), _element_orders.end(),
                     [this](int o) { return static_cast<std::size_t>(o) == order(); });
}

std::vector<int> Group::p_regular_classes(int p) const
{
  std::vector<int> res;
  for (std::size_t c = 0; c < _class_reps.size(); ++c)
    if (_element_orders[_class_reps[c]] % p != 0)
      res.push_back(static_cast<int>(c));
  return res;
}

ElementSet Group::all() const
{
  ElementSet s(order());
  for (std::size_t i = 0; i < order(); ++i)
    s.insert(static_cast<int>(i));
  return s;
}

ElementSet Group::trivial() const
{
  ElementSet s(order());
  s.insert(0);
  return s;
}

ElementSet Group::closure(std::vector<int> const &gens) const
{
  ElementSet s(order());
  std::vector<int> queue{0};
  s.insert(0);

  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int g : gens) {
      int y = mul(queue[i], g);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(y);
      }
    }
  }

  return s;
}

ElementSet Group::conjugate(int g, ElementSet const &s) const
{
  ElementSet r(order());
  for (int x : s.elements())
    r.insert(conj(g, x));
  return r;
}

bool Group::is_subgroup(ElementSet const &s) const
{
  if (!s.contains(0))
    return false;
  auto el = s.elements();
  for (int a : el)
    for (int b : el)
      if (!s.contains(mul(a, b)))
        return false;
  return true;
}

bool Group::is_normal(ElementSet const &s) const
{
  for (int g : _generators)
    if (conjugate(g, s) != s)
      return false;
  return true;
}

ElementSet Group::center() const
{
  ElementSet z(order());
  for (std::size_t x = 0; x < order(); ++x) {
    bool central = true;
    for (int g : _generators)
      if (mul(g, static_cast<int>(x)) != mul(static_cast<int>(x), g)) {
        central = false;
        break;
      }
    if (central)
      z.insert(static_cast<int>(x));
  }
  return z;
}

ElementSet Group::derived_subgroup() const
{
  ElementSet comms(order());
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      comms.insert(mul(mul(static_cast<int>(a), static_cast<int>(b)),
                       mul(_inv[a], _inv[b])));
  return closure(comms.elements());
}

std::uint64_t Group::table_hash() const
{
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  feed(order());
  for (int m : _mult)
    feed(static_cast<std::uint64_t>(m));
  return h;
}

SubgroupTable const &Group::subgroups() const
{
  std::call_once(_lazy->subgroups_once, [this] {
    _lazy->subgroups = std::make_unique<SubgroupTable>(*this);
  });
  return *_lazy->subgroups;
}

SectionTable const &Group::sections() const
{
  std::call_once(_lazy->sections_once, [this] {
    _lazy->sections = std::make_unique<SectionTable>(ptr());
  });
  return *_lazy->sections;
}

AutomorphismGroup const &Group::automorphisms() const
{
  std::call_once(_lazy->autos_once, [this] {
    _lazy->autos = std::make_unique<AutomorphismGroup>(*this);
  });
  return *_lazy->autos;
}

int Group::iso_id() const
{
  int id = _lazy->iso_id.load();
  if (id < 0) {
    id = iso_type(*this);
    _lazy->iso_id.store(id);
  }
  return id;
}

std::shared_ptr<void const> Group::memo_any(std::string const &key,
                                            std::function<std::shared_ptr<void const>()> const &make) const
{
  {
    std::lock_guard<std::mutex> lock(_lazy->memo_mtx);
    auto it = _lazy->memo.find(key);
    if (it != _lazy->memo.end())
      return it->second;
  }
  auto value = make();
  std::lock_guard<std::mutex> lock(_lazy->memo_mtx);
  return _lazy->memo.emplace(key, value).first->second;
}

Embedding const &subgroup_of(GroupPtr const &g, int subgroup)
{ return g->subgroups().embedding(subgroup); }

} // namespace bisetkit
