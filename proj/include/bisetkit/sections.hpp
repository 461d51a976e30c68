#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "group.hpp"

namespace bisetkit {

/** Section T/S of a group, S normal in T, with the quotient realized as a group. */
struct Section
{
  int top = -1;
  int bottom = -1;
  GroupPtr quotient;
  std::vector<int> projection;   // group element -> quotient element, -1 outside T
  std::vector<int> lifts;        // quotient element -> some element of T
  std::vector<int> stabilizer;   // N_G(T) ∩ N_G(S)

  std::size_t quotient_order() const { return quotient->order(); }
};

/** Sections up to conjugacy. */
class SectionTable
{
public:
  explicit SectionTable(GroupPtr const &g);

  std::size_t size() const { return _sections.size(); }
  Section const &operator[](int i) const { return _sections[i]; }
  std::vector<Section> const &all() const { return _sections; }

  // representative section conjugate to (top, bottom), and some g with
  // g (top, bottom) g^-1 equal to it
  std::pair<int, int> locate(int top, int bottom) const;

  std::vector<int> proper() const;

private:
  Group const &_group;
  std::vector<Section> _sections;
  // per top class representative: bottom subgroup -> (section, transporter in N_G(top))
  std::map<int, std::map<int, std::pair<int, int>>> _locator;
};

std::vector<Section const *> proper_sections(GroupPtr const &g);

} // namespace bisetkit
