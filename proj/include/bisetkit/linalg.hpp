#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace bisetkit {

template<typename F>
using Vector = std::vector<F>;

template<typename F>
using Matrix = std::vector<std::vector<F>>;

/** Reduced row echelon form in place; zero rows are dropped. Returns pivot columns. */
template<typename F>
std::vector<std::size_t> rref(Matrix<F> &a)
{
  std::vector<std::size_t> pivots;
  if (a.empty())
    return pivots;

  std::size_t ncols = a[0].size();
  std::size_t row = 0;

  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && is_zero(a[sel][col]))
      ++sel;
    if (sel == a.size())
      continue;

    std::swap(a[row], a[sel]);

    F inv = F(1) / a[row][col];
    for (std::size_t j = col; j < ncols; ++j)
      a[row][j] *= inv;

    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || is_zero(a[i][col]))
        continue;
      F f = a[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (!is_zero(a[row][j]))
          a[i][j] -= f * a[row][j];
    }

    pivots.push_back(col);
    ++row;
  }

  a.resize(row);
  return pivots;
}

template<typename F>
std::size_t rank(Matrix<F> a)
{ return rref(a).size(); }

/** Basis of { v : a v = 0 } for an a with ncols columns. */
template<typename F>
Matrix<F> nullspace(Matrix<F> a, std::size_t ncols)
{
  auto pivots = rref(a);

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots)
    is_pivot[c] = true;

  Matrix<F> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free])
      continue;

    Vector<F> v(ncols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][free];

    basis.push_back(std::move(v));
  }

  return basis;
}

/** Some solution x of a x = b, if one exists. */
template<typename F>
std::optional<Vector<F>> solve(Matrix<F> const &a, Vector<F> const &b, std::size_t ncols)
{
  Matrix<F> aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }

  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == ncols)
    return std::nullopt;

  Vector<F> x(ncols, F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug[r][ncols];

  return x;
}

template<typename F>
Matrix<F> transpose(Matrix<F> const &a, std::size_t ncols)
{
  Matrix<F> t(ncols, Vector<F>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      t[j][i] = a[i][j];
  return t;
}

template<typename F>
Vector<F> mat_vec(Matrix<F> const &a, Vector<F> const &v)
{
  Vector<F> r(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(a[i][j]) && !is_zero(v[j]))
        r[i] += a[i][j] * v[j];
  return r;
}

/** Incrementally maintained subspace, kept in reduced echelon form. */
template<typename F>
class Span
{
public:
  explicit Span(std::size_t dim = 0)
  : _dim(dim)
  {}

  std::size_t ambient_dim() const { return _dim; }
  std::size_t dim() const { return _rows.size(); }
  Matrix<F> const &basis() const { return _rows; }

  Vector<F> reduce(Vector<F> v) const
  {
    for (std::size_t r = 0; r < _rows.size(); ++r) {
      auto c = _pivots[r];
      if (is_zero(v[c]))
        continue;
      F f = v[c];
      for (std::size_t j = c; j < _dim; ++j)
        if (!is_zero(_rows[r][j]))
          v[j] -= f * _rows[r][j];
    }
    return v;
  }

  bool contains(Vector<F> const &v) const
  {
    auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](F const &x) { return is_zero(x); });
  }

  bool insert(Vector<F> const &v)
  {
    auto w = reduce(v);

    std::size_t c = 0;
    while (c < _dim && is_zero(w[c]))
      ++c;
    if (c == _dim)
      return false;

    F inv = F(1) / w[c];
    for (std::size_t j = c; j < _dim; ++j)
      w[j] *= inv;

    for (std::size_t r = 0; r < _rows.size(); ++r) {
      if (is_zero(_rows[r][c]))
        continue;
      F f = _rows[r][c];
      for (std::size_t j = c; j < _dim; ++j)
        if (!is_zero(w[j]))
          _rows[r][j] -= f * w[j];
    }

    auto pos = std::lower_bound(_pivots.begin(), _pivots.end(), c) - _pivots.begin();
    _pivots.insert(_pivots.begin() + pos, c);
    _rows.insert(_rows.begin() + pos, std::move(w));
    return true;
  }

  void insert_all(Matrix<F> const &vs)
  {
    for (auto const &v : vs) {
      if (dim() == _dim)
        return;
      insert(v);
    }
  }

  bool operator==(Span const &o) const
  { return _dim == o._dim && _pivots == o._pivots && _rows == o._rows; }

private:
  std::size_t _dim;
  std::vector<std::size_t> _pivots;
  Matrix<F> _rows;
};

/** dim(U ∩ W) = dim U + dim W - dim(U + W) */
template<typename F>
std::size_t intersection_dim(Span<F> const &u, Span<F> const &w)
{
  Span<F> sum = u;
  sum.insert_all(w.basis());
  return u.dim() + w.dim() - sum.dim();
}

} // namespace bisetkit
