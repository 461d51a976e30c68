#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "element_set.hpp"
#include "group.hpp"

namespace bisetkit {

struct Subgroup
{
  ElementSet set;
  std::vector<int> elements;   // sorted
  std::vector<int> generators;
  int order = 0;
  int class_index = -1;
  bool normal = false;
  bool cyclic = false;
  // some g with g S g^-1 equal to the class representative
  int to_rep = 0;
};

struct SubgroupClass
{
  int rep = -1;
  std::vector<int> members;
  int normalizer_order = 0;
};

/**
 * All subgroups of a group in canonical order (order ascending, then
 * lexicographic on sorted element indices), with conjugacy fusion and
 * lazily computed Möbius values.
 */
class SubgroupTable
{
public:
  explicit SubgroupTable(Group const &g);

  std::size_t size() const { return _subgroups.size(); }
  Subgroup const &operator[](int i) const { return _subgroups[i]; }
  std::vector<Subgroup> const &all() const { return _subgroups; }

  int trivial() const { return 0; }
  int whole() const { return static_cast<int>(_subgroups.size()) - 1; }

  int find(ElementSet const &s) const;
  int find_generated(std::vector<int> const &gens) const;
  int conjugate(int g, int i) const;
  bool contains(int big, int small) const;

  std::size_t class_count() const { return _classes.size(); }
  SubgroupClass const &subgroup_class(int c) const { return _classes[c]; }
  int class_of(int i) const { return _subgroups[i].class_index; }
  int class_rep(int c) const { return _classes[c].rep; }

  std::vector<int> normal_subgroups() const;
  std::vector<int> p_prime_classes(int p) const;

  // N_G(S) as an element set
  ElementSet normalizer(int i) const;

  int moebius(int k, int h) const;
  // mu(K, top) for every subgroup K (0 unless K <= top)
  std::vector<int> const &moebius_to(int top) const;

  Embedding const &embedding(int i) const;

  Group const &group() const { return _group; }

  // restores a table from precomputed subgroup element lists
  SubgroupTable(Group const &g, std::vector<std::vector<int>> const &subgroups);

private:
  void finish();

  Group const &_group;
  std::vector<Subgroup> _subgroups;
  std::vector<SubgroupClass> _classes;
  std::unordered_map<ElementSet, int, ElementSetHash> _index;

  mutable std::mutex _mtx;
  mutable std::vector<std::unique_ptr<std::vector<int>>> _moebius;
  mutable std::vector<std::unique_ptr<Embedding>> _embeddings;
};

std::vector<int> p_prime_subgroup_classes(GroupPtr const &g, int p);

} // namespace bisetkit
