#include <map>

#include "bisetkit/burnside.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

int class_of_set(Group const &g, ElementSet const &s)
{
  auto const &tab = g.subgroups();
  int i = tab.find(s);
  if (i < 0)
    throw ConsistencyError("subset is not a subgroup");
  return tab.class_of(i);
}

void check_group(BurnsideElt const &a, BurnsideElt const &b)
{
  if (a.group != b.group)
    throw DomainError("Burnside elements over different groups");
}

std::vector<int> inverse_map(std::vector<int> const &to_parent, std::size_t parent_order)
{
  std::vector<int> inv(parent_order, -1);
  for (std::size_t x = 0; x < to_parent.size(); ++x)
    inv[to_parent[x]] = static_cast<int>(x);
  return inv;
}

// representatives g of the double cosets A g B
std::vector<int> double_coset_reps(Group const &g, std::vector<int> const &a, std::vector<int> const &b)
{
  std::vector<bool> seen(g.order(), false);
  std::vector<int> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    reps.push_back(static_cast<int>(x));
    for (int u : a)
      for (int v : b)
        seen[g.mul(g.mul(u, static_cast<int>(x)), v)] = true;
  }
  return reps;
}

template<typename T>
T const &unpack(ElementaryData const &d)
{
  auto p = std::get_if<T const *>(&d);
  if (!p || !*p)
    throw DomainError("elementary operation given the wrong kind of data");
  return **p;
}

} // anonymous namespace

BurnsideElt BurnsideElt::zero(GroupPtr const &g)
{ return BurnsideElt{g, std::vector<Rational>(g->subgroups().class_count(), Rational(0))}; }

BurnsideElt BurnsideElt::transitive(GroupPtr const &g, int subgroup_class)
{
  auto x = zero(g);
  x.coeffs.at(subgroup_class) = 1;
  return x;
}

BurnsideElt BurnsideElt::identity(GroupPtr const &g)
{ return transitive(g, static_cast<int>(g->subgroups().class_count()) - 1); }

BurnsideElt &BurnsideElt::operator+=(BurnsideElt const &o)
{
  check_group(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] += o.coeffs[i];
  return *this;
}

BurnsideElt BurnsideElt::operator+(BurnsideElt const &o) const
{
  auto r = *this;
  return r += o;
}

BurnsideElt BurnsideElt::operator-(BurnsideElt const &o) const
{ return *this + o * Rational(-1); }

BurnsideElt BurnsideElt::operator*(Rational const &q) const
{
  auto r = *this;
  for (auto &c : r.coeffs)
    c *= q;
  return r;
}

BurnsideElt BurnsideElt::operator*(BurnsideElt const &o) const
{ return product(*this, o); }

bool BurnsideElt::operator==(BurnsideElt const &o) const
{ return group == o.group && coeffs == o.coeffs; }

bool BurnsideElt::is_zero() const
{
  for (auto const &c : coeffs)
    if (!bisetkit::is_zero(c))
      return false;
  return true;
}

bool BurnsideElt::in_pprime_span(int p) const
{
  auto const &tab = group->subgroups();
  for (std::size_t c = 0; c < coeffs.size(); ++c)
    if (!bisetkit::is_zero(coeffs[c]) && tab[tab.class_rep(static_cast<int>(c))].order % p == 0)
      return false;
  return true;
}

long mark(GroupPtr const &g, int k_class, int h_class)
{
  auto const &tab = g->subgroups();
  auto const &K = tab[tab.class_rep(k_class)];
  auto const &H = tab[tab.class_rep(h_class)];

  // cosets xK with H xK = xK, i.e. x^-1 H x inside K
  std::vector<bool> seen(g->order(), false);
  long count = 0;
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (seen[x])
      continue;
    for (int k : K.elements)
      seen[g->mul(static_cast<int>(x), k)] = true;

    int xi = g->inv(static_cast<int>(x));
    bool fixed = true;
    for (int h : H.generators)
      if (!K.set.contains(g->conj(xi, h))) {
        fixed = false;
        break;
      }
    if (fixed)
      ++count;
  }
  return count;
}

Matrix<Rational> const &table_of_marks(GroupPtr const &g)
{
  return g->memo<Matrix<Rational>>("table_of_marks", [&] {
    std::size_t n = g->subgroups().class_count();
    Matrix<Rational> m(n, Vector<Rational>(n, Rational(0)));
    auto const &tab = g->subgroups();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t h = 0; h <= k; ++h) {
        // nonzero only if H is subconjugate to K, which forces h <= k
        if (tab[tab.class_rep(static_cast<int>(h))].order > tab[tab.class_rep(static_cast<int>(k))].order)
          continue;
        m[k][h] = mark(g, static_cast<int>(k), static_cast<int>(h));
      }
    return m;
  });
}

MarkVector marks_of(BurnsideElt const &x)
{
  auto const &m = table_of_marks(x.group);
  MarkVector v(m.size(), Rational(0));
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    for (std::size_t h = 0; h <= k; ++h)
      if (!is_zero(m[k][h]))
        v[h] += x.coeffs[k] * m[k][h];
  }
  return v;
}

BurnsideElt from_marks(GroupPtr const &g, MarkVector const &v)
{
  auto const &m = table_of_marks(g);
  std::size_t n = m.size();
  auto x = BurnsideElt::zero(g);

  // v[h] = sum_{k >= h} x_k m[k][h], solved from the top class down
  for (std::size_t h = n; h-- > 0;) {
    Rational rhs = v[h];
    for (std::size_t k = h + 1; k < n; ++k)
      if (!is_zero(x.coeffs[k]) && !is_zero(m[k][h]))
        rhs -= x.coeffs[k] * m[k][h];
    x.coeffs[h] = rhs / m[h][h];
  }
  return x;
}

BurnsideElt product(BurnsideElt const &x, BurnsideElt const &y)
{
  check_group(x, y);
  auto const &g = x.group;
  auto const &tab = g->subgroups();
  auto res = BurnsideElt::zero(g);

  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    auto const &K = tab[tab.class_rep(static_cast<int>(k))];
    for (std::size_t l = 0; l < y.coeffs.size(); ++l) {
      if (is_zero(y.coeffs[l]))
        continue;
      auto const &L = tab[tab.class_rep(static_cast<int>(l))];
      Rational c = x.coeffs[k] * y.coeffs[l];
      for (int r : double_coset_reps(*g, K.elements, L.elements))
        res.coeffs[class_of_set(*g, K.set & g->conjugate(r, L.set))] += c;
    }
  }
  return res;
}

BurnsideElt product_by_orbits(GroupPtr const &g, int k_class, int l_class)
{
  auto const &tab = g->subgroups();
  auto const &K = tab[tab.class_rep(k_class)];
  auto const &L = tab[tab.class_rep(l_class)];

  auto coset_label = [&](int a, Subgroup const &S) {
    int m = a;
    for (int s : S.elements)
      m = std::min(m, g->mul(a, s));
    return m;
  };

  std::map<std::pair<int, int>, bool> visited;
  auto res = BurnsideElt::zero(g);

  for (std::size_t a = 0; a < g->order(); ++a) {
    int ak = coset_label(static_cast<int>(a), K);
    if (ak != static_cast<int>(a))
      continue;
    for (std::size_t b = 0; b < g->order(); ++b) {
      int bl = coset_label(static_cast<int>(b), L);
      if (bl != static_cast<int>(b) || visited.count({ak, bl}))
        continue;

      // orbit of the pair
      for (std::size_t x = 0; x < g->order(); ++x)
        visited[{coset_label(g->mul(static_cast<int>(x), ak), K),
                 coset_label(g->mul(static_cast<int>(x), bl), L)}] = true;

      ElementSet stab(g->order());
      for (std::size_t x = 0; x < g->order(); ++x)
        if (coset_label(g->mul(static_cast<int>(x), ak), K) == ak &&
            coset_label(g->mul(static_cast<int>(x), bl), L) == bl)
          stab.insert(static_cast<int>(x));
      res.coeffs[class_of_set(*g, stab)] += 1;
    }
  }
  return res;
}

BurnsideElt idempotent(GroupPtr const &g, int h_class)
{
  MarkVector v(g->subgroups().class_count(), Rational(0));
  v.at(h_class) = 1;
  return from_marks(g, v);
}

BurnsideElt idempotent_moebius(GroupPtr const &g, int h_class)
{
  auto const &tab = g->subgroups();
  int h = tab.class_rep(h_class);
  auto const &mu = tab.moebius_to(h);
  auto res = BurnsideElt::zero(g);
  for (std::size_t k = 0; k < tab.size(); ++k)
    if (mu[k] != 0)
      res.coeffs[tab.class_of(static_cast<int>(k))] += Rational(tab[static_cast<int>(k)].order * mu[k]);
  return res * frac(1, tab.subgroup_class(h_class).normalizer_order);
}

BurnsideElt pprime_idempotent_sum(GroupPtr const &g, int p)
{
  auto res = BurnsideElt::zero(g);
  for (int c : g->subgroups().p_prime_classes(p))
    res += idempotent(g, c);
  return res;
}

Rational deflation_number(GroupPtr const &g, int normal_subgroup)
{
  auto const &tab = g->subgroups();
  auto const &N = tab[normal_subgroup];
  if (!N.normal)
    throw DomainError("deflation number needs a normal subgroup");

  auto const &mu = tab.moebius_to(tab.whole());
  Rational sum = 0;
  for (std::size_t x = 0; x < tab.size(); ++x) {
    if (mu[x] == 0)
      continue;
    auto const &X = tab[static_cast<int>(x)];
    long inter = static_cast<long>((X.set & N.set).count());
    if (static_cast<long>(X.order) * N.order / inter == static_cast<long>(g->order()))
      sum += Rational(static_cast<long>(X.order) * mu[x]);
  }
  return sum / Rational(static_cast<long>(g->order()));
}

long double_coset_count(GroupPtr const &g, int k, int l)
{
  auto const &tab = g->subgroups();
  return static_cast<long>(double_coset_reps(*g, tab[k].elements, tab[l].elements).size());
}

Rational orbit_pairing(BurnsideElt const &x, BurnsideElt const &y)
{
  check_group(x, y);
  auto const &g = x.group;
  auto const &tab = g->subgroups();

  auto const &pairs = g->memo<Matrix<Rational>>("orbit_pairing", [&] {
    std::size_t n = tab.class_count();
    Matrix<Rational> m(n, Vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b <= a; ++b)
        m[a][b] = m[b][a] = double_coset_count(g, tab.class_rep(static_cast<int>(a)),
                                               tab.class_rep(static_cast<int>(b)));
    return m;
  });

  Rational sum = 0;
  for (std::size_t a = 0; a < x.coeffs.size(); ++a) {
    if (is_zero(x.coeffs[a]))
      continue;
    for (std::size_t b = 0; b < y.coeffs.size(); ++b)
      if (!is_zero(y.coeffs[b]))
        sum += x.coeffs[a] * y.coeffs[b] * pairs[a][b];
  }
  return sum;
}

long generator_count(GroupPtr const &g, int h_class)
{
  auto const &tab = g->subgroups();
  auto const &H = tab[tab.class_rep(h_class)];
  long n = 0;
  for (int x : H.elements)
    if (g->element_order(x) == H.order)
      ++n;
  return n;
}

ClassFunction linearize(BurnsideElt const &x)
{
  auto const &g = x.group;
  auto const &tab = g->subgroups();
  auto f = ClassFunction::zero(g);

  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    auto const &K = tab[tab.class_rep(static_cast<int>(k))];
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      int e = g->class_reps()[c];
      // fixed cosets aK of e: a^-1 e a in K, counted over a and divided by |K|
      long n = 0;
      for (std::size_t a = 0; a < g->order(); ++a)
        if (K.set.contains(g->conj(g->inv(static_cast<int>(a)), e)))
          ++n;
      f.values[c] += Cyclotomic(x.coeffs[k] * frac(n, K.order));
    }
  }
  return f;
}

BurnsideElt restrict_to(Embedding const &e, BurnsideElt const &x)
{
  auto const &G = *e.parent;
  auto const &gtab = G.subgroups();
  auto inv = inverse_map(e.to_parent, G.order());
  auto res = BurnsideElt::zero(e.sub);

  if (x.group.get() != e.parent.get())
    throw DomainError("restriction applied to an element of another group");

  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    auto const &K = gtab[gtab.class_rep(static_cast<int>(k))];
    for (int r : double_coset_reps(G, e.to_parent, K.elements)) {
      auto conj = G.conjugate(r, K.set);
      ElementSet in_sub(e.sub->order());
      for (int h : e.to_parent)
        if (conj.contains(h))
          in_sub.insert(inv[h]);
      res.coeffs[class_of_set(*e.sub, in_sub)] += x.coeffs[k];
    }
  }
  return res;
}

BurnsideElt induce_from(Embedding const &e, BurnsideElt const &x)
{
  if (x.group.get() != e.sub.get())
    throw DomainError("induction applied to an element of another group");

  auto const &stab = e.sub->subgroups();
  auto res = BurnsideElt::zero(e.parent);
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    ElementSet img(e.parent->order());
    for (int y : stab[stab.class_rep(static_cast<int>(k))].elements)
      img.insert(e.to_parent[y]);
    res.coeffs[class_of_set(*e.parent, img)] += x.coeffs[k];
  }
  return res;
}

BurnsideElt inflate(Quotient const &q, BurnsideElt const &x)
{
  if (x.group.get() != q.group.get())
    throw DomainError("inflation applied to an element of another group");

  auto const &qtab = q.group->subgroups();
  auto res = BurnsideElt::zero(q.parent);
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    auto const &K = qtab[qtab.class_rep(static_cast<int>(k))];
    ElementSet pre(q.parent->order());
    for (std::size_t g = 0; g < q.parent->order(); ++g)
      if (K.set.contains(q.projection[g]))
        pre.insert(static_cast<int>(g));
    res.coeffs[class_of_set(*q.parent, pre)] += x.coeffs[k];
  }
  return res;
}

BurnsideElt deflate(Quotient const &q, BurnsideElt const &x)
{
  if (x.group.get() != q.parent.get())
    throw DomainError("deflation applied to an element of another group");

  auto const &tab = q.parent->subgroups();
  auto res = BurnsideElt::zero(q.group);
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    ElementSet img(q.group->order());
    for (int y : tab[tab.class_rep(static_cast<int>(k))].elements)
      img.insert(q.projection[y]);
    res.coeffs[class_of_set(*q.group, img)] += x.coeffs[k];
  }
  return res;
}

BurnsideElt transport(Isomorphism const &f, BurnsideElt const &x)
{
  if (x.group.get() != f.source.get())
    throw DomainError("isomorphism applied to an element of another group");

  auto const &tab = f.source->subgroups();
  auto res = BurnsideElt::zero(f.target);
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
    if (is_zero(x.coeffs[k]))
      continue;
    ElementSet img(f.target->order());
    for (int y : tab[tab.class_rep(static_cast<int>(k))].elements)
      img.insert(f.map[y]);
    res.coeffs[class_of_set(*f.target, img)] += x.coeffs[k];
  }
  return res;
}

BurnsideElt elementary_op(OpKind kind, ElementaryData data, BurnsideElt const &x,
                          std::optional<int> bifree_p)
{
  auto check_kernel = [&](Quotient const &q) {
    if (bifree_p && q.parent->subgroups()[q.kernel].order % *bifree_p == 0)
      throw DomainError("kernel of inflation or deflation is not a p'-group");
  };

  switch (kind) {
  case OpKind::res:
    return restrict_to(unpack<Embedding>(data), x);
  case OpKind::ind:
    return induce_from(unpack<Embedding>(data), x);
  case OpKind::inf:
    check_kernel(unpack<Quotient>(data));
    return inflate(unpack<Quotient>(data), x);
  case OpKind::def:
    check_kernel(unpack<Quotient>(data));
    return deflate(unpack<Quotient>(data), x);
  case OpKind::iso:
    return transport(unpack<Isomorphism>(data), x);
  }
  throw DomainError("unknown elementary operation");
}

} // namespace bisetkit
