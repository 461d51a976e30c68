#include "bisetkit/bgroups.hpp"
#include "bisetkit/burnside.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

bool admissible(int order, int p)
{ return p == 0 || order % p != 0; }

} // anonymous namespace

bool is_bdelta_group(GroupPtr const &g, int p)
{
  return g->memo<bool>("is_bdelta:" + std::to_string(p), [&] {
    auto const &tab = g->subgroups();
    for (int n : tab.normal_subgroups()) {
      if (n == tab.trivial() || !admissible(tab[n].order, p))
        continue;
      if (!is_zero(deflation_number(g, n)))
        return false;
    }
    return true;
  });
}

bool is_b_group(GroupPtr const &g)
{ return is_bdelta_group(g, 0); }

MinimalQuotient const &minimal_quotient(GroupPtr const &g, int p)
{
  return g->memo<MinimalQuotient>("minimal_quotient:" + std::to_string(p), [&] {
    auto const &tab = g->subgroups();
    MinimalQuotient res;

    for (int n : tab.normal_subgroups()) {
      if (!admissible(tab[n].order, p) || is_zero(deflation_number(g, n)))
        continue;
      auto const &q = quotient_of(g, n);
      if (!is_bdelta_group(q.group, p))
        continue;

      if (!res.quotient) {
        res.quotient = q.group;
        res.witness = n;
      } else if (q.group->iso_id() != res.quotient->iso_id()) {
        throw ConsistencyError("two qualifying normal subgroups of " + iso_label(*g) +
                               " give non-isomorphic minimal quotients");
      }
    }

    if (!res.quotient)
      throw ConsistencyError("no qualifying normal subgroup for " + iso_label(*g));
    return res;
  });
}

BetaRecord beta_delta(GroupPtr const &g, int p)
{
  auto const &d = minimal_quotient(g, p);
  auto const &c = minimal_quotient(g, 0);
  return BetaRecord{g, p, d.quotient, d.witness, c.quotient, c.witness};
}

bool gg_related(GroupPtr const &g, GroupPtr const &h, int p)
{
  if (g->order() % h->order() != 0)
    return false;
  auto const &tab = g->subgroups();
  for (int n : tab.normal_subgroups()) {
    if (!admissible(tab[n].order, p) || g->order() / tab[n].order != h->order())
      continue;
    if (quotient_of(g, n).group->iso_id() == h->iso_id())
      return true;
  }
  return false;
}

std::vector<int> e_delta_basis(GroupPtr const &gb, GroupPtr const &h, int p)
{
  auto const &tab = h->subgroups();
  std::vector<int> res;
  for (std::size_t c = 0; c < tab.class_count(); ++c)
    if (gg_related(subgroup_of(h, tab.class_rep(static_cast<int>(c))).sub, gb, p))
      res.push_back(static_cast<int>(c));
  return res;
}

std::vector<int> const &beta_types(GroupPtr const &h, int p)
{
  return h->memo<std::vector<int>>("beta_types:" + std::to_string(p), [&] {
    auto const &tab = h->subgroups();
    std::vector<int> res;
    for (std::size_t c = 0; c < tab.class_count(); ++c) {
      auto const &k = subgroup_of(h, tab.class_rep(static_cast<int>(c))).sub;
      res.push_back(minimal_quotient(k, p).quotient->iso_id());
    }
    return res;
  });
}

long dim_simple_trivial(GroupPtr const &gb, GroupPtr const &h, int p)
{
  if (!is_bdelta_group(gb, p))
    throw DomainError(iso_label(*gb) + " is not a minimal group for this prime");

  long n = 0;
  for (int t : beta_types(h, p))
    if (t == gb->iso_id())
      ++n;
  return n;
}

} // namespace bisetkit
