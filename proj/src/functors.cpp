#include "bisetkit/functors.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "bisetkit/errors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/sections.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

std::vector<std::size_t> pivots(CMatrix const &rows)
{
  std::vector<std::size_t> out;
  for (auto const &r : rows) {
    std::size_t c = 0;
    while (c < r.size() && is_zero(r[c]))
      ++c;
    out.push_back(c);
  }
  return out;
}

// coordinates of v in a reduced row basis; throws if v is outside the span
CVector coordinates(CMatrix const &rows, CVector const &v)
{
  auto piv = pivots(rows);
  CVector c(rows.size());
  CVector rest = v;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c[i] = v[piv[i]];
    if (is_zero(c[i]))
      continue;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (!is_zero(rows[i][j]))
        rest[j] -= c[i] * rows[i][j];
  }
  for (auto const &x : rest)
    if (!is_zero(x))
      throw ConsistencyError("vector is not in the evaluation span");
  return c;
}

CVector zero_vector(std::size_t n)
{
  return CVector(n, Cyclotomic(0));
}

class BurnsideFunctor : public FunctorHandle
{
public:
  explicit BurnsideFunctor(Flavor flavor)
    : _flavor(flavor)
  {}

  std::string name() const override { return _flavor.is_bifree() ? "KB^Delta" : "KB"; }
  Flavor flavor() const override { return _flavor; }

  std::size_t dimension(GroupPtr const &g) const override { return classes(g).size(); }

  std::vector<std::string> basis_labels(GroupPtr const &g) const override
  {
    std::vector<std::string> out;
    auto const &tab = g->subgroups();
    for (int c : classes(g))
      out.push_back("[G/" + iso_label(*subgroup_of(g, tab.class_rep(c)).sub) + "#" + std::to_string(c) + "]");
    return out;
  }

  CVector act(GoursatClass const &l, CVector const &v) const override
  {
    auto const &src = classes(l.right);
    BurnsideElt u = BurnsideElt::zero(l.right);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_rational())
        throw DomainError("Burnside evaluations take rational vectors");
      u.coeffs[src[i]] = v[i].rational_value();
    }
    auto w = act_on_burnside(l, u, _flavor);
    auto const &dst = classes(l.left);
    CVector out;
    for (int c : dst)
      out.emplace_back(w.coeffs[c]);
    return out;
  }

private:
  std::vector<int> const &classes(GroupPtr const &g) const
  {
    return g->memo<std::vector<int>>("burnside_functor_classes:" + std::to_string(_flavor.p), [&] {
      std::vector<int> out;
      auto const &tab = g->subgroups();
      for (std::size_t c = 0; c < tab.class_count(); ++c)
        if (!_flavor.is_bifree() || tab[tab.class_rep(static_cast<int>(c))].order % _flavor.p != 0)
          out.push_back(static_cast<int>(c));
      return out;
    });
  }

  Flavor _flavor;
};

class ClassFunctionFunctor : public FunctorHandle
{
public:
  ClassFunctionFunctor(int support_p, Flavor flavor)
    : _p(support_p), _flavor(flavor)
  {
    if (_p != 0 && _flavor.p != _p)
      throw DomainError("p-regular class functions need the matching bifree flavor");
  }

  std::string name() const override
  {
    return _p ? "R_k(p=" + std::to_string(_p) + ")" : "R_C(" + _flavor.to_string() + ")";
  }
  Flavor flavor() const override { return _flavor; }
  std::size_t dimension(GroupPtr const &g) const override { return support_classes(*g, _p).size(); }

  std::vector<std::string> basis_labels(GroupPtr const &g) const override
  {
    std::vector<std::string> out;
    for (int c : support_classes(*g, _p))
      out.push_back("1_{class " + std::to_string(c) + ", order " +
                    std::to_string(g->element_order(g->class_reps()[c])) + "}");
    return out;
  }

  CVector act(GoursatClass const &l, CVector const &v) const override
  {
    ClassFunction f = ClassFunction::zero(l.right, _p);
    f.values = v;
    return bisetkit::act(l, f, _flavor).values;
  }

private:
  int _p;
  Flavor _flavor;
};

class SpanFunctor : public FunctorHandle
{
public:
  SpanFunctor(ClassFunction gen, Flavor flavor)
    : _gen(std::move(gen)), _flavor(flavor)
  {}

  std::string name() const override { return "span<" + _gen.group->name() + ">(" + _flavor.to_string() + ")"; }
  Flavor flavor() const override { return _flavor; }
  std::size_t dimension(GroupPtr const &g) const override { return rows(g).size(); }

  std::vector<std::string> basis_labels(GroupPtr const &g) const override
  {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rows(g).size(); ++i)
      out.push_back("v" + std::to_string(i));
    return out;
  }

  CVector act(GoursatClass const &l, CVector const &v) const override
  {
    auto const &src = rows(l.right);
    ClassFunction f = ClassFunction::zero(l.right, _gen.p);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i]))
        for (std::size_t j = 0; j < f.values.size(); ++j)
          f.values[j] += v[i] * src[i][j];
    auto w = bisetkit::act(l, f, _flavor);
    return coordinates(rows(l.left), w.values);
  }

private:
  CMatrix const &rows(GroupPtr const &g) const
  {
    std::lock_guard<std::mutex> lock(_mtx);
    auto it = _rows.find(g.get());
    if (it != _rows.end())
      return it->second.second;
    CMatrix r;
    for (auto const &f : subfunctor_span(_gen, g, _flavor))
      r.push_back(f.values);
    return _rows.emplace(g.get(), std::make_pair(g, std::move(r))).first->second.second;
  }

  ClassFunction _gen;
  Flavor _flavor;
  mutable std::mutex _mtx;
  mutable std::map<Group const *, std::pair<GroupPtr, CMatrix>> _rows;
};

class CorruptedFunctor : public FunctorHandle
{
public:
  explicit CorruptedFunctor(FunctorPtr base)
    : _base(std::move(base))
  {}

  std::string name() const override { return "corrupted(" + _base->name() + ")"; }
  Flavor flavor() const override { return _base->flavor(); }
  std::size_t dimension(GroupPtr const &g) const override { return _base->dimension(g); }
  std::vector<std::string> basis_labels(GroupPtr const &g) const override { return _base->basis_labels(g); }

  CVector act(GoursatClass const &l, CVector const &v) const override
  {
    if (l.left == l.right && l.quotient_order() < l.left->order())
      return zero_vector(_base->dimension(l.left));
    return _base->act(l, v);
  }

private:
  FunctorPtr _base;
};

CMatrix reduced(Span<Cyclotomic> const &s)
{
  return s.basis();
}

} // namespace

CVector FunctorHandle::act(BisetElt const &x, CVector const &v) const
{
  if (x.flavor() != flavor())
    throw DomainError("biset flavor does not match the functor");
  CVector out = zero_vector(dimension(x.target()));
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0)
      continue;
    auto w = act((*x.basis)[i], v);
    Cyclotomic c(x.coeffs[i]);
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] += c * w[j];
  }
  return out;
}

CMatrix FunctorHandle::images(GoursatClass const &l) const
{
  std::size_t n = dimension(l.right);
  CMatrix out;
  for (std::size_t j = 0; j < n; ++j) {
    CVector e = zero_vector(n);
    e[j] = Cyclotomic(1);
    out.push_back(act(l, e));
  }
  return out;
}

FunctorPtr burnside_functor(Flavor flavor)
{
  return std::make_shared<BurnsideFunctor>(flavor);
}

FunctorPtr class_function_functor(int support_p, Flavor flavor)
{
  return std::make_shared<ClassFunctionFunctor>(support_p, flavor);
}

FunctorPtr span_functor(ClassFunction const &gen, Flavor flavor)
{
  return std::make_shared<SpanFunctor>(gen, flavor);
}

FunctorPtr corrupted_functor(FunctorPtr base)
{
  return std::make_shared<CorruptedFunctor>(std::move(base));
}

std::vector<GroupPtr> proper_section_quotients(GroupPtr const &g)
{
  return g->memo<std::vector<GroupPtr>>("proper_section_quotients", [&] {
    std::vector<GroupPtr> out;
    std::vector<int> seen;
    for (auto const *s : proper_sections(g)) {
      int id = s->quotient->iso_id();
      if (std::find(seen.begin(), seen.end(), id) != seen.end())
        continue;
      seen.push_back(id);
      out.push_back(s->quotient);
    }
    return out;
  });
}

KernelSpace restriction_kernel(FunctorHandle const &f, GroupPtr const &g)
{
  std::size_t n = f.dimension(g);
  Span<Cyclotomic> rows(n);
  for (auto const &h : proper_section_quotients(g)) {
    if (rows.dim() == n)
      break;
    auto basis = goursat_basis(h, g, f.flavor());
    for (auto const &l : basis->classes()) {
      if (rows.dim() == n)
        break;
      auto im = f.images(l);   // im[j] = image of e_j
      std::size_t m = f.dimension(h);
      for (std::size_t r = 0; r < m; ++r) {
        CVector row(n);
        for (std::size_t j = 0; j < n; ++j)
          row[j] = im[j][r];
        rows.insert(row);
      }
    }
  }

  KernelSpace k;
  k.group = g;
  Span<Cyclotomic> ker(n);
  for (auto const &v : nullspace(rows.basis(), n))
    ker.insert(v);
  k.basis = reduced(ker);

  auto const &auts = g->automorphisms();
  auto endo = goursat_basis(g, g, f.flavor());
  for (std::size_t c = 0; c < auts.out_size(); ++c) {
    auto const &phi = auts[auts.out_rep(static_cast<int>(c))];
    PairSet graph;
    for (std::size_t x = 0; x < g->order(); ++x)
      graph.emplace_back(phi[x], static_cast<int>(x));
    auto const &l = (*endo)[endo->identify(graph)];
    CMatrix a(k.dim(), CVector(k.dim()));
    for (std::size_t i = 0; i < k.dim(); ++i) {
      auto col = coordinates(k.basis, f.act(l, k.basis[i]));
      for (std::size_t j = 0; j < k.dim(); ++j)
        a[j][i] = col[j];
    }
    k.out_action.push_back(std::move(a));
  }
  return k;
}

CMatrix image_sum(FunctorHandle const &f, GroupPtr const &g)
{
  std::size_t n = f.dimension(g);
  Span<Cyclotomic> span(n);
  for (auto const &h : proper_section_quotients(g)) {
    if (span.dim() == n)
      break;
    auto basis = goursat_basis(g, h, f.flavor());
    for (auto const &l : basis->classes()) {
      if (span.dim() == n)
        break;
      for (auto const &v : f.images(l))
        span.insert(v);
    }
  }
  return reduced(span);
}

CMatrix ideal_image(FunctorHandle const &f, GroupPtr const &g)
{
  std::size_t n = f.dimension(g);
  Span<Cyclotomic> span(n);
  auto basis = goursat_basis(g, g, f.flavor());
  for (auto const &l : basis->classes()) {
    if (span.dim() == n)
      break;
    if (l.quotient_order() < g->order())
      for (auto const &v : f.images(l))
        span.insert(v);
  }
  return reduced(span);
}

bool verify_condition(FunctorHandle const &f, GroupPtr const &g)
{
  std::size_t n = f.dimension(g);
  Span<Cyclotomic> span(n);
  span.insert_all(restriction_kernel(f, g).basis);
  span.insert_all(ideal_image(f, g));
  return span.dim() == n;
}

Splitting splitting(FunctorHandle const &f, GroupPtr const &g)
{
  Splitting s;
  s.dim = f.dimension(g);
  Span<Cyclotomic> k(s.dim), j(s.dim);
  k.insert_all(restriction_kernel(f, g).basis);
  j.insert_all(image_sum(f, g));
  s.kernel_dim = k.dim();
  s.image_dim = j.dim();
  s.intersection_dim = intersection_dim(k, j);
  return s;
}

bool annihilated_by_proper_sections(FunctorHandle const &f, GroupPtr const &g, CVector const &v)
{
  for (auto const &h : proper_section_quotients(g))
    for (auto const &l : goursat_basis(h, g, f.flavor())->classes())
      for (auto const &x : f.act(l, v))
        if (!is_zero(x))
          return false;
  return true;
}

long out_multiplicity(KernelSpace const &k, CVector const &xi)
{
  auto const &auts = k.group->automorphisms();
  if (xi.size() != auts.out_size())
    throw DomainError("character has the wrong number of Out classes");
  // Out(G) is a group of order out_size; each class is one element
  Cyclotomic s;
  for (std::size_t c = 0; c < xi.size(); ++c) {
    Cyclotomic tr;
    for (std::size_t i = 0; i < k.dim(); ++i)
      tr += k.out_action[c][i][i];
    s += xi[c].conj() * tr;
  }
  s = s * Cyclotomic(frac(1, static_cast<long>(xi.size())));
  if (!s.is_rational() || s.rational_value().get_den() != 1 || s.rational_value() < 0)
    throw ConsistencyError("Out multiplicity is not a nonnegative integer: " + s.to_string());
  return s.rational_value().get_num().get_si();
}

SimpleLabel::SimpleLabel(GroupPtr g, CVector x)
  : group(std::move(g)), xi(std::move(x))
{
  auto const &auts = group->automorphisms();
  if (xi.size() != auts.out_size())
    throw DomainError("Out character has " + std::to_string(xi.size()) + " values, expected " +
                      std::to_string(auts.out_size()));
  for (std::size_t a = 0; a < xi.size(); ++a)
    for (std::size_t b = 0; b < xi.size(); ++b)
      if (xi[auts.out_mul(static_cast<int>(a), static_cast<int>(b))] != xi[a] * xi[b])
        throw DomainError("Out character is not multiplicative");
}

SimpleLabel SimpleLabel::trivial(GroupPtr const &g)
{
  return SimpleLabel(g, CVector(g->automorphisms().out_size(), Cyclotomic(1)));
}

std::vector<long> out_units(long m)
{
  auto g = cyclic_group(static_cast<int>(m));
  auto const &auts = g->automorphisms();
  int gen = cyclic_element(static_cast<int>(m), 1);
  std::vector<long> out;
  for (std::size_t c = 0; c < auts.out_size(); ++c) {
    int img = auts[auts.out_rep(static_cast<int>(c))][gen];
    long u = 0;
    while (cyclic_element(static_cast<int>(m), u) != img)
      ++u;
    out.push_back(u);
  }
  return out;
}

SimpleLabel SimpleLabel::dirichlet(UnitCharacter const &xi)
{
  CVector v;
  for (long u : out_units(xi.modulus()))
    v.push_back(xi(u));
  return SimpleLabel(cyclic_group(static_cast<int>(xi.modulus())), v);
}

std::string SimpleLabel::to_string() const
{
  std::string s = "(" + iso_label(*group) + ", [";
  for (std::size_t i = 0; i < xi.size(); ++i)
    s += (i ? ", " : "") + xi[i].to_string();
  return s + "])";
}

namespace {

// sparse (Out class, multiplicity) lists
using Projection = std::vector<std::pair<int, long>>;
using Projections = std::vector<std::vector<Projection>>;

// essential projections of y o x over the pruned bases (|q| = |G0|)
Projections const &pairing_projections(GroupPtr const &g0, GroupPtr const &h, Flavor flavor)
{
  using Key = std::tuple<Group const *, Group const *, int>;
  static std::mutex mtx;
  static std::map<Key, std::pair<std::vector<GroupPtr>, std::shared_ptr<Projections const>>> cache;
  Key key{g0.get(), h.get(), flavor.p};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end())
      return *it->second.second;
  }
  auto bx = goursat_basis(h, g0, flavor, g0->order());
  auto by = goursat_basis(g0, h, flavor, g0->order());
  auto pr = std::make_shared<Projections>(bx->size(), std::vector<Projection>(by->size()));
  for (std::size_t i = 0; i < bx->size(); ++i)
    for (std::size_t j = 0; j < by->size(); ++j) {
      std::map<int, long> v;
      for (auto const &ps : mackey_product((*by)[j], (*bx)[i])) {
        // the Out class is constant on G0 x G0 orbits, so the normal form suffices
        if (ps.size() != g0->order())
          continue;
        int o = essential_class(normalize(g0, g0, ps));
        if (o >= 0)
          ++v[o];
      }
      (*pr)[i][j].assign(v.begin(), v.end());
    }
  std::lock_guard<std::mutex> lock(mtx);
  return *cache.emplace(key, std::make_pair(std::vector<GroupPtr>{g0, h}, pr)).first->second.second;
}

} // namespace

long simple_dim(SimpleLabel const &label, GroupPtr const &h, Flavor flavor)
{
  auto const &pr = pairing_projections(label.group, h, flavor);
  if (pr.empty() || pr[0].empty())
    return 0;
  Matrix<Cyclotomic> m(pr.size(), CVector(pr[0].size()));
  for (std::size_t i = 0; i < pr.size(); ++i)
    for (std::size_t j = 0; j < pr[i].size(); ++j) {
      Cyclotomic s;
      for (auto const &[c, n] : pr[i][j])
        s += Cyclotomic(Rational(n)) * label.xi[c];
      m[i][j] = s;
    }
  return static_cast<long>(rank(m));
}

} // namespace bisetkit
