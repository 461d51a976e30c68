#pragma once

#include <vector>

#include "group.hpp"

namespace bisetkit {

/**
 * Minimal quotients. Throughout, p = 0 drops the p'-condition on normal
 * subgroups, which gives the classical notions.
 */
struct BetaRecord
{
  GroupPtr group;
  int p = 0;
  GroupPtr beta_delta;
  int witness = -1;            // normal subgroup index in group
  GroupPtr classical_beta;
  int classical_witness = -1;
};

bool is_bdelta_group(GroupPtr const &g, int p);
bool is_b_group(GroupPtr const &g);

// minimal quotient for the given p (or p = 0), memoized per group
struct MinimalQuotient
{
  GroupPtr quotient;
  int witness = -1;
};
MinimalQuotient const &minimal_quotient(GroupPtr const &g, int p);

BetaRecord beta_delta(GroupPtr const &g, int p);

bool gg_related(GroupPtr const &g, GroupPtr const &h, int p);

std::vector<int> e_delta_basis(GroupPtr const &gb, GroupPtr const &h, int p);

// iso type of the minimal quotient of every subgroup class of h
std::vector<int> const &beta_types(GroupPtr const &h, int p);

long dim_simple_trivial(GroupPtr const &gb, GroupPtr const &h, int p);

} // namespace bisetkit
