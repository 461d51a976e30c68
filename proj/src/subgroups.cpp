#include <algorithm>
#include <numeric>

#include "bisetkit/cache.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/rational.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

std::vector<int> greedy_generators(Group const &g, ElementSet const &s)
{
  std::vector<int> gens;
  ElementSet cur = g.trivial();
  auto target = s.count();
  for (int x : s.elements()) {
    if (cur.count() == target)
      break;
    if (cur.contains(x))
      continue;
    gens.push_back(x);
    cur = g.closure(gens);
  }
  return gens;
}

} // anonymous namespace

SubgroupTable::SubgroupTable(Group const &g)
: _group(g)
{
  if (auto cached = load_cached_subgroups(g)) {
    for (auto const &elems : *cached) {
      Subgroup s;
      s.set = ElementSet(g.order());
      for (int x : elems)
        s.set.insert(x);
      s.generators = greedy_generators(g, s.set);
      _subgroups.push_back(std::move(s));
    }
    finish();
    return;
  }

  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  std::vector<Subgroup> found;

  auto add = [&](ElementSet set, std::vector<int> gens) -> bool {
    if (seen.count(set))
      return false;
    seen.emplace(set, static_cast<int>(found.size()));
    Subgroup s;
    s.set = std::move(set);
    s.generators = std::move(gens);
    found.push_back(std::move(s));
    return true;
  };

  int n = static_cast<int>(g.order());
  add(g.all(), g.small_generators());

  for (int x = 0; x < n; ++x)
    add(g.closure({x}), x == 0 ? std::vector<int>{} : std::vector<int>{x});

  std::vector<int> cyclic;
  for (std::size_t i = 0; i < found.size(); ++i)
    if (found[i].generators.size() <= 1)
      cyclic.push_back(static_cast<int>(i));

  std::vector<int> frontier(cyclic);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int h : frontier) {
      for (int c : cyclic) {
        if (found[c].set.is_subset_of(found[h].set))
          continue;

        long ho = static_cast<long>(found[h].set.count());
        long co = static_cast<long>(found[c].set.count());
        long io = static_cast<long>((found[h].set & found[c].set).count());
        long l = lcm(ho, co);
        long lower = ho * co / io;

        long cand = l;
        while (cand < lower || n % cand != 0)
          cand += l;
        if (cand == n)
          continue;

        auto gens = found[h].generators;
        gens.push_back(found[c].generators[0]);
        auto set = g.closure(gens);
        if (add(std::move(set), std::move(gens)))
          next.push_back(static_cast<int>(found.size()) - 1);
      }
    }
    frontier = std::move(next);
  }

  _subgroups = std::move(found);
  finish();
  store_cached_subgroups(g, *this);
}

SubgroupTable::SubgroupTable(Group const &g, std::vector<std::vector<int>> const &subgroups)
: _group(g)
{
  for (auto const &elems : subgroups) {
    Subgroup s;
    s.set = ElementSet(g.order());
    for (int x : elems)
      s.set.insert(x);
    if (!g.is_subgroup(s.set))
      throw ConsistencyError("stored element list is not a subgroup");
    s.generators = greedy_generators(g, s.set);
    _subgroups.push_back(std::move(s));
  }
  finish();
}

void SubgroupTable::finish()
{
  auto &G = _group;

  for (auto &s : _subgroups) {
    s.elements = s.set.elements();
    s.order = static_cast<int>(s.elements.size());
  }

  std::sort(_subgroups.begin(), _subgroups.end(), [](Subgroup const &a, Subgroup const &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return a.elements < b.elements;
  });

  _index.clear();
  for (std::size_t i = 0; i < _subgroups.size(); ++i) {
    auto &s = _subgroups[i];
    _index.emplace(s.set, static_cast<int>(i));
    s.cyclic = std::any_of(s.elements.begin(), s.elements.end(),
                           [&](int x) { return G.element_order(x) == s.order; });
    s.class_index = -1;
  }

  if (_index.size() != _subgroups.size())
    throw ConsistencyError("duplicate subgroup in table");

  _classes.clear();
  for (std::size_t i = 0; i < _subgroups.size(); ++i) {
    if (_subgroups[i].class_index != -1)
      continue;

    SubgroupClass cls;
    cls.rep = static_cast<int>(i);
    int c = static_cast<int>(_classes.size());

    _subgroups[i].class_index = c;
    _subgroups[i].to_rep = 0;
    std::vector<int> queue{static_cast<int>(i)};

    for (std::size_t q = 0; q < queue.size(); ++q) {
      int cur = queue[q];
      for (int gen : G.generators()) {
        int j = conjugate(gen, cur);
        if (_subgroups[j].class_index != -1)
          continue;
        _subgroups[j].class_index = c;
        _subgroups[j].to_rep = G.mul(_subgroups[cur].to_rep, G.inv(gen));
        queue.push_back(j);
      }
    }

    std::sort(queue.begin(), queue.end());
    cls.members = queue;
    cls.normalizer_order = static_cast<int>(G.order() / queue.size());
    for (int m : queue)
      _subgroups[m].normal = queue.size() == 1;

    _classes.push_back(std::move(cls));
  }

  _moebius.clear();
  _moebius.resize(_subgroups.size());
  _embeddings.clear();
  _embeddings.resize(_subgroups.size());
}

int SubgroupTable::find(ElementSet const &s) const
{
  auto it = _index.find(s);
  return it == _index.end() ? -1 : it->second;
}

int SubgroupTable::find_generated(std::vector<int> const &gens) const
{ return find(_group.closure(gens)); }

int SubgroupTable::conjugate(int g, int i) const
{
  int j = find(_group.conjugate(g, _subgroups[i].set));
  if (j < 0)
    throw ConsistencyError("conjugate subgroup missing from table");
  return j;
}

bool SubgroupTable::contains(int big, int small) const
{ return _subgroups[small].set.is_subset_of(_subgroups[big].set); }

std::vector<int> SubgroupTable::normal_subgroups() const
{
  std::vector<int> res;
  for (std::size_t i = 0; i < _subgroups.size(); ++i)
    if (_subgroups[i].normal)
      res.push_back(static_cast<int>(i));
  return res;
}

std::vector<int> SubgroupTable::p_prime_classes(int p) const
{
  std::vector<int> res;
  for (std::size_t c = 0; c < _classes.size(); ++c)
    if (_subgroups[_classes[c].rep].order % p != 0)
      res.push_back(static_cast<int>(c));
  return res;
}

ElementSet SubgroupTable::normalizer(int i) const
{
  ElementSet n(_group.order());
  auto const &s = _subgroups[i];
  for (std::size_t g = 0; g < _group.order(); ++g) {
    bool ok = true;
    for (int x : s.elements)
      if (!s.set.contains(_group.conj(static_cast<int>(g), x))) {
        ok = false;
        break;
      }
    if (ok)
      n.insert(static_cast<int>(g));
  }
  return n;
}

std::vector<int> const &SubgroupTable::moebius_to(int top) const
{
  std::lock_guard<std::mutex> lock(_mtx);
  auto &slot = _moebius[top];
  if (slot)
    return *slot;

  std::vector<int> mu(_subgroups.size(), 0);
  mu[top] = 1;

  std::vector<int> inside;
  for (int k = top; k >= 0; --k)
    if (contains(top, k))
      inside.push_back(k);

  // inside is in decreasing index order, hence decreasing subgroup order
  for (std::size_t a = 1; a < inside.size(); ++a) {
    int k = inside[a];
    int sum = 0;
    for (std::size_t b = 0; b < a; ++b) {
      int x = inside[b];
      if (_subgroups[x].order > _subgroups[k].order && contains(x, k))
        sum += mu[x];
    }
    mu[k] = -sum;
  }

  slot = std::make_unique<std::vector<int>>(std::move(mu));
  return *slot;
}

int SubgroupTable::moebius(int k, int h) const
{ return moebius_to(h)[k]; }

Embedding const &SubgroupTable::embedding(int i) const
{
  std::lock_guard<std::mutex> lock(_mtx);
  auto &slot = _embeddings[i];
  if (slot)
    return *slot;

  auto e = std::make_unique<Embedding>();
  e->parent = _group.ptr();
  e->parent_subgroup = i;

  if (i == whole()) {
    e->sub = e->parent;
    e->to_parent.resize(_group.order());
    std::iota(e->to_parent.begin(), e->to_parent.end(), 0);
  } else if (_subgroups[i].order == 1) {
    e->sub = Group::generate({});
    e->to_parent = {0};
  } else {
    std::vector<Perm> gens;
    for (int x : _subgroups[i].generators)
      gens.push_back(_group.perm(x));
    e->sub = Group::generate(gens);
    e->to_parent.resize(e->sub->order());
    for (std::size_t x = 0; x < e->sub->order(); ++x)
      e->to_parent[x] = _group.index_of(e->sub->perm(static_cast<int>(x)));
  }

  slot = std::move(e);
  return *slot;
}

std::vector<int> p_prime_subgroup_classes(GroupPtr const &g, int p)
{ return g->subgroups().p_prime_classes(p); }

} // namespace bisetkit
