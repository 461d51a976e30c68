#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace bisetkit {

std::optional<std::vector<int>> find_isomorphism(Group const &g, Group const &h);
bool is_isomorphic(Group const &g, Group const &h);

/** Aut(G) by generator-image backtracking, with the decomposition into Out(G) classes. */
class AutomorphismGroup
{
public:
  explicit AutomorphismGroup(Group const &g);

  std::size_t size() const { return _autos.size(); }
  std::vector<int> const &operator[](int i) const { return _autos[i]; }
  int find(std::vector<int> const &images) const;
  int compose(int a, int b) const;   // a after b
  int inverse(int a) const;
  bool is_inner(int a) const { return _out_of[a] == 0; }
  std::size_t inner_count() const { return _inner_count; }

  std::size_t out_size() const { return _out_reps.size(); }
  int out_class(int a) const { return _out_of[a]; }
  int out_rep(int c) const { return _out_reps[c]; }
  int out_mul(int a, int b) const { return _out_table[a * out_size() + b]; }
  int out_inv(int a) const;

private:
  std::vector<std::vector<int>> _autos;
  std::unordered_map<std::string, int> _index;
  std::vector<int> _out_of;
  std::vector<int> _out_reps;
  std::vector<int> _out_table;
  std::size_t _inner_count = 0;
};

// all isomorphisms G -> H (as element maps)
std::vector<std::vector<int>> all_isomorphisms(Group const &g, Group const &h);

/** Global registry of isomorphism types seen so far. */
int iso_type(Group const &g);
GroupPtr iso_type_rep(int id);
std::string iso_label(int id);
std::string iso_label(Group const &g);

// invariant fingerprint used to bucket candidates
std::string invariant_key(Group const &g);

} // namespace bisetkit
