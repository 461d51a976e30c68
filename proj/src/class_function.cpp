#include "bisetkit/class_function.hpp"
#include "bisetkit/errors.hpp"

namespace bisetkit {

std::vector<int> support_classes(Group const &g, int p)
{
  if (p == 0) {
    std::vector<int> all(g.class_count());
    for (std::size_t c = 0; c < all.size(); ++c)
      all[c] = static_cast<int>(c);
    return all;
  }
  return g.p_regular_classes(p);
}

ClassFunction ClassFunction::zero(GroupPtr const &g, int p)
{
  ClassFunction f;
  f.group = g;
  f.p = p;
  f.values.assign(support_classes(*g, p).size(), Cyclotomic());
  return f;
}

ClassFunction ClassFunction::constant(GroupPtr const &g, Cyclotomic const &c, int p)
{
  ClassFunction f = zero(g, p);
  for (auto &v : f.values)
    v = c;
  return f;
}

std::vector<int> ClassFunction::support() const
{ return support_classes(*group, p); }

bool ClassFunction::defined_at(int element) const
{ return p == 0 || group->element_order(element) % p != 0; }

Cyclotomic ClassFunction::at(int element) const
{
  if (!defined_at(element))
    throw DomainError("class function is not defined at a p-singular element");
  int c = group->class_of(element);
  if (p == 0)
    return values[c];
  auto sup = support();
  for (std::size_t i = 0; i < sup.size(); ++i)
    if (sup[i] == c)
      return values[i];
  throw ConsistencyError("support lookup failed");
}

std::vector<Cyclotomic> ClassFunction::expand() const
{
  std::vector<Cyclotomic> per_class(group->class_count());
  auto sup = support();
  for (std::size_t i = 0; i < sup.size(); ++i)
    per_class[sup[i]] = values[i];

  std::vector<Cyclotomic> res(group->order());
  for (std::size_t x = 0; x < group->order(); ++x)
    res[x] = per_class[group->class_of(static_cast<int>(x))];
  return res;
}

ClassFunction ClassFunction::from_elements(GroupPtr const &g, std::vector<Cyclotomic> const &v, int p)
{
  ClassFunction f;
  f.group = g;
  f.p = p;
  for (int c : support_classes(*g, p))
    f.values.push_back(v[g->class_reps()[c]]);
  return f;
}

ClassFunction &ClassFunction::operator+=(ClassFunction const &o)
{
  if (group != o.group || p != o.p)
    throw DomainError("class functions on different groups or supports");
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] += o.values[i];
  return *this;
}

ClassFunction ClassFunction::operator+(ClassFunction const &o) const
{
  ClassFunction r = *this;
  return r += o;
}

ClassFunction ClassFunction::operator-(ClassFunction const &o) const
{
  ClassFunction r = *this;
  return r += o * Cyclotomic(-1);
}

ClassFunction ClassFunction::operator*(Cyclotomic const &c) const
{
  ClassFunction r = *this;
  for (auto &v : r.values)
    v *= c;
  return r;
}

ClassFunction ClassFunction::pointwise(ClassFunction const &o) const
{
  if (group != o.group || p != o.p)
    throw DomainError("class functions on different groups or supports");
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values.size(); ++i)
    r.values[i] *= o.values[i];
  return r;
}

bool ClassFunction::operator==(ClassFunction const &o) const
{ return group == o.group && p == o.p && values == o.values; }

bool ClassFunction::is_zero() const
{
  for (auto const &v : values)
    if (!v.is_zero())
      return false;
  return true;
}

} // namespace bisetkit
