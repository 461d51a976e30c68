#include <algorithm>
#include <numeric>

#include "bisetkit/errors.hpp"
#include "bisetkit/sections.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

struct BuiltQuotient
{
  GroupPtr group;
  std::vector<int> projection;
  std::vector<int> lifts;
};

BuiltQuotient build_quotient(Group const &g, int top, ElementSet const &bottom)
{
  auto const &tab = g.subgroups();
  auto const &T = tab[top];
  BuiltQuotient res;
  res.projection.assign(g.order(), -1);

  if (bottom.count() == 1) {
    auto const &emb = tab.embedding(top);
    res.group = emb.sub;
    res.lifts = emb.to_parent;
    for (std::size_t x = 0; x < emb.to_parent.size(); ++x)
      res.projection[emb.to_parent[x]] = static_cast<int>(x);
    return res;
  }

  auto bottom_elems = bottom.elements();

  std::vector<int> label(g.order(), -1);
  std::vector<int> reps;
  for (int t : T.elements) {
    int m = t;
    for (int s : bottom_elems)
      m = std::min(m, g.mul(t, s));
    label[t] = m;
    if (m == t)
      reps.push_back(t);
  }

  std::vector<int> coset_id(g.order(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    coset_id[reps[i]] = static_cast<int>(i);

  auto action = [&](int t) {
    Perm p(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      p[i] = static_cast<std::uint16_t>(coset_id[label[g.mul(t, reps[i])]]);
    return p;
  };

  std::vector<Perm> gens;
  for (int t : T.generators)
    gens.push_back(action(t));

  res.group = Group::generate(gens);
  if (res.group->order() != reps.size())
    throw ConsistencyError("coset action is not faithful on the quotient");

  res.lifts.assign(res.group->order(), -1);
  for (int t : T.elements) {
    int q = res.group->index_of(action(t));
    res.projection[t] = q;
    if (res.lifts[q] == -1)
      res.lifts[q] = t;
  }

  return res;
}

} // anonymous namespace

SectionTable::SectionTable(GroupPtr const &g)
: _group(*g)
{
  auto const &tab = g->subgroups();

  for (std::size_t c = 0; c < tab.class_count(); ++c) {
    int top = tab.class_rep(static_cast<int>(c));
    auto const &T = tab[top];

    auto norm_set = tab.normalizer(top);
    auto norm = norm_set.elements();

    std::vector<int> normal_in_top;
    for (std::size_t j = 0; j < tab.size(); ++j) {
      if (tab[j].order > T.order || !tab.contains(top, static_cast<int>(j)))
        continue;
      bool ok = true;
      for (int t : T.generators)
        if (g->conjugate(t, tab[j].set) != tab[j].set) {
          ok = false;
          break;
        }
      if (ok)
        normal_in_top.push_back(static_cast<int>(j));
    }

    auto &loc = _locator[top];
    for (int s : normal_in_top) {
      if (loc.count(s))
        continue;

      // orbit of s under N_G(T), with transporters
      std::map<int, int> trans{{s, 0}};
      std::vector<int> queue{s};
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (int n : norm) {
          int j = tab.conjugate(n, queue[q]);
          if (trans.count(j))
            continue;
          trans[j] = g->mul(trans[queue[q]], g->inv(n));
          queue.push_back(j);
        }

      auto built = build_quotient(*g, top, tab[s].set);

      Section sec;
      sec.top = top;
      sec.bottom = s;
      sec.quotient = built.group;
      sec.projection = std::move(built.projection);
      sec.lifts = std::move(built.lifts);
      for (int n : norm)
        if (g->conjugate(n, tab[s].set) == tab[s].set)
          sec.stabilizer.push_back(n);

      int idx = static_cast<int>(_sections.size());
      _sections.push_back(std::move(sec));
      for (auto [j, t] : trans)
        loc[j] = {idx, t};
    }
  }
}

std::pair<int, int> SectionTable::locate(int top, int bottom) const
{
  auto const &tab = _group.subgroups();
  int g1 = tab[top].to_rep;
  int rep = tab.class_rep(tab.class_of(top));
  int moved = tab.conjugate(g1, bottom);

  auto it = _locator.find(rep);
  if (it == _locator.end())
    throw ConsistencyError("section top is not a class representative");
  auto jt = it->second.find(moved);
  if (jt == it->second.end())
    throw DomainError("pair is not a section");

  auto [sec, n] = jt->second;
  return {sec, _group.mul(n, g1)};
}

std::vector<int> SectionTable::proper() const
{
  std::vector<int> res;
  for (std::size_t i = 0; i < _sections.size(); ++i)
    if (_sections[i].quotient_order() < _group.order())
      res.push_back(static_cast<int>(i));
  return res;
}

std::vector<Section const *> proper_sections(GroupPtr const &g)
{
  std::vector<Section const *> res;
  for (int i : g->sections().proper())
    res.push_back(&g->sections()[i]);
  return res;
}

Quotient const &quotient_of(GroupPtr const &g, int normal_subgroup)
{
  auto const &tab = g->subgroups();
  if (!tab[normal_subgroup].normal)
    throw DomainError("subgroup is not normal");
  return g->memo<Quotient>("quotient:" + std::to_string(normal_subgroup), [&] {
    auto built = build_quotient(*g, tab.whole(), tab[normal_subgroup].set);
    return Quotient{g, built.group, normal_subgroup, std::move(built.projection)};
  });
}

Quotient quotient(GroupPtr const &g, ElementSet const &normal_subgroup)
{
  if (!g->is_subgroup(normal_subgroup) || !g->is_normal(normal_subgroup))
    throw DomainError("subgroup is not normal");

  auto const &tab = g->subgroups();
  int idx = tab.find(normal_subgroup);
  if (idx >= 0)
    return quotient_of(g, idx);
  auto built = build_quotient(*g, tab.whole(), normal_subgroup);
  return Quotient{g, built.group, idx, std::move(built.projection)};
}

} // namespace bisetkit
