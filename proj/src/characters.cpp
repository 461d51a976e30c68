#include "bisetkit/characters.hpp"

#include <map>
#include <mutex>

#include "bisetkit/errors.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

namespace {

void expect_group(ClassFunction const &f, GroupPtr const &g, char const *what)
{
  if (f.group != g)
    throw DomainError(std::string(what) + ": class function lives on the wrong group");
}

void check_kernel(Quotient const &q, ClassFunction const &f)
{
  int n = q.parent->subgroups()[q.kernel].order;
  if (f.p != 0 && n % f.p == 0)
    throw DomainError("p-regular class functions need a kernel of order prime to " + std::to_string(f.p));
}

long mod(long a, long m)
{
  long r = a % m;
  return r < 0 ? r + m : r;
}

// x = a mod d, x = 1 mod m/d, for coprime d and m/d
long crt_one(long a, long d, long m)
{
  for (long x = mod(a, d); x < m; x += d)
    if (mod(x, m / d) == 1 % (m / d))
      return x;
  throw ConsistencyError("no CRT solution");
}

long mult_order(long a, long m)
{
  if (m == 1)
    return 1;
  long k = 1, x = mod(a, m);
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

} // namespace

ClassFunction restrict_cf(Embedding const &e, ClassFunction const &f)
{
  expect_group(f, e.parent, "restriction");
  auto v = f.expand();
  std::vector<Cyclotomic> w(e.sub->order());
  for (std::size_t x = 0; x < w.size(); ++x)
    w[x] = v[e.to_parent[x]];
  return ClassFunction::from_elements(e.sub, w, f.p);
}

ClassFunction induce_cf(Embedding const &e, ClassFunction const &f)
{
  expect_group(f, e.sub, "induction");
  auto const &g = *e.parent;
  std::vector<Cyclotomic> inside(g.order());
  auto v = f.expand();
  for (std::size_t x = 0; x < v.size(); ++x)
    inside[e.to_parent[x]] = v[x];
  std::vector<char> in_sub(g.order(), 0);
  for (int x : e.to_parent)
    in_sub[x] = 1;
  std::vector<Cyclotomic> w(g.order());
  Cyclotomic scale(frac(1, static_cast<long>(e.sub->order())));
  for (int c : support_classes(g, f.p)) {
    int h = g.class_reps()[c];
    Cyclotomic s;
    for (std::size_t x = 0; x < g.order(); ++x) {
      int y = g.conj(g.inv(static_cast<int>(x)), h);
      if (in_sub[y])
        s += inside[y];
    }
    w[h] = s * scale;
  }
  return ClassFunction::from_elements(e.parent, w, f.p);
}

ClassFunction inflate_cf(Quotient const &q, ClassFunction const &f)
{
  expect_group(f, q.group, "inflation");
  check_kernel(q, f);
  auto v = f.expand();
  std::vector<Cyclotomic> w(q.parent->order());
  for (std::size_t x = 0; x < w.size(); ++x)
    w[x] = v[q.projection[x]];
  return ClassFunction::from_elements(q.parent, w, f.p);
}

ClassFunction deflate_cf(Quotient const &q, ClassFunction const &f)
{
  expect_group(f, q.parent, "deflation");
  check_kernel(q, f);
  auto const &g = *q.parent;
  auto const &kernel = g.subgroups()[q.kernel].elements;
  auto v = f.expand();
  std::vector<int> lift(q.group->order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x)
    if (lift[q.projection[x]] < 0)
      lift[q.projection[x]] = static_cast<int>(x);
  std::vector<Cyclotomic> w(q.group->order());
  Cyclotomic scale(frac(1, static_cast<long>(kernel.size())));
  for (int c : support_classes(*q.group, f.p)) {
    int y = q.group->class_reps()[c];
    Cyclotomic s;
    for (int n : kernel)
      s += v[g.mul(lift[y], n)];
    w[y] = s * scale;
  }
  return ClassFunction::from_elements(q.group, w, f.p);
}

ClassFunction transport_cf(Isomorphism const &f, ClassFunction const &x)
{
  expect_group(x, f.source, "isomorphism");
  auto v = x.expand();
  std::vector<Cyclotomic> w(f.target->order());
  for (std::size_t a = 0; a < v.size(); ++a)
    w[f.map[a]] = v[a];
  return ClassFunction::from_elements(f.target, w, x.p);
}

ClassFunction act(OpKind kind, ElementaryData data, ClassFunction const &f)
{
  switch (kind) {
  case OpKind::res:
    return restrict_cf(*std::get<Embedding const *>(data), f);
  case OpKind::ind:
    return induce_cf(*std::get<Embedding const *>(data), f);
  case OpKind::inf:
    return inflate_cf(*std::get<Quotient const *>(data), f);
  case OpKind::def:
    return deflate_cf(*std::get<Quotient const *>(data), f);
  case OpKind::iso:
    return transport_cf(*std::get<Isomorphism const *>(data), f);
  }
  throw DomainError("unknown elementary kind");
}

ClassFunction act(GoursatClass const &l, ClassFunction const &f, Flavor flavor)
{
  if (f.p != 0 && flavor.p != f.p)
    throw DomainError("p-regular class functions admit only " + std::to_string(f.p) + "-bifree bisets");
  expect_group(f, l.right, "biset action");
  auto w = factorize(l, flavor);
  auto u = restrict_cf(*w.right_embedding, f);
  u = deflate_cf(*w.right_quotient, u);
  u = transport_cf(w.iso, u);
  u = inflate_cf(*w.left_quotient, u);
  return induce_cf(*w.left_embedding, u);
}

ClassFunction act(BisetElt const &x, ClassFunction const &f)
{
  ClassFunction r = ClassFunction::zero(x.target(), f.p);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    if (x.coeffs[i] != 0)
      r += act((*x.basis)[i], f, x.flavor()) * Cyclotomic(x.coeffs[i]);
  return r;
}

ClassFunction act_fixed_points(GoursatClass const &l, ClassFunction const &f)
{
  expect_group(f, l.right, "biset action");
  auto const &h = *l.left;
  std::vector<std::vector<int>> fiber(h.order());
  auto ps = l.pairs();
  for (auto [a, b] : ps)
    fiber[a].push_back(b);
  auto v = f.expand();
  std::vector<Cyclotomic> w(h.order());
  Cyclotomic scale(frac(1, static_cast<long>(ps.size())));
  for (int c : support_classes(h, f.p)) {
    int x = h.class_reps()[c];
    Cyclotomic s;
    for (std::size_t a = 0; a < h.order(); ++a)
      for (int u : fiber[h.conj(h.inv(static_cast<int>(a)), x)])
        s += v[u];
    w[x] = s * scale;
  }
  return ClassFunction::from_elements(l.left, w, f.p);
}

ClassFunction decomposition_map(ClassFunction const &f, int p)
{
  if (f.p != 0)
    throw DomainError("decomposition map needs a class function on all classes");
  return ClassFunction::from_elements(f.group, f.expand(), p);
}

GroupPtr cyclic_group(int m)
{
  static std::mutex mtx;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto &g = cache[m];
  if (!g)
    g = make_named("C" + std::to_string(m));
  return g;
}

int cyclic_element(int m, long residue)
{
  auto g = cyclic_group(m);
  Perm p(m);
  for (int i = 0; i < m; ++i)
    p[i] = static_cast<std::uint16_t>(mod(i + residue, m));
  return g->index_of(p);
}

UnitCharacter UnitCharacter::trivial(long m)
{
  if (m < 1)
    throw DomainError("modulus must be positive");
  UnitCharacter x;
  x._m = m;
  long rest = m;
  for (long q = 2; q <= rest; ++q) {
    if (rest % q != 0)
      continue;
    long qa = 1;
    int a = 0;
    while (rest % q == 0) {
      rest /= q;
      qa *= q;
      ++a;
    }
    std::vector<long> local;
    if (q == 2) {
      if (a == 2)
        local = {3};
      else if (a >= 3)
        local = {qa - 1, 5};
    } else {
      long phi = qa / q * (q - 1);
      for (long g = 2; g < qa; ++g)
        if (gcd(g, q) == 1 && mult_order(g, qa) == phi) {
          local = {g};
          break;
        }
    }
    for (long g : local) {
      x._gens.push_back(crt_one(g, qa, m));
      x._orders.push_back(mult_order(g, qa));
    }
  }
  x._exps.assign(x._gens.size(), 0);
  return x;
}

UnitCharacter UnitCharacter::from_exponents(long m, std::vector<long> exponents)
{
  auto x = trivial(m);
  if (exponents.size() != x._gens.size())
    throw DomainError("expected " + std::to_string(x._gens.size()) + " exponents mod " + std::to_string(m));
  for (std::size_t i = 0; i < exponents.size(); ++i)
    x._exps[i] = mod(exponents[i], x._orders[i]);
  return x;
}

UnitCharacter UnitCharacter::from_values(long m, std::vector<Cyclotomic> const &table)
{
  auto x = trivial(m);
  for (std::size_t i = 0; i < x._gens.size(); ++i) {
    auto const &v = table.at(x._gens[i]);
    long e = 0;
    while (e < x._orders[i] && Cyclotomic::root_of_unity(static_cast<int>(x._orders[i]), e) != v)
      ++e;
    if (e == x._orders[i])
      throw DomainError("table is not a character mod " + std::to_string(m));
    x._exps[i] = e;
  }
  if (x.table() != table)
    throw DomainError("table is not a character mod " + std::to_string(m));
  return x;
}

std::vector<UnitCharacter> UnitCharacter::all(long m)
{
  auto base = trivial(m);
  std::vector<UnitCharacter> out;
  std::vector<long> e(base._gens.size(), 0);
  while (true) {
    out.push_back(from_exponents(m, e));
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == base._orders[i])
      e[i++] = 0;
    if (i == e.size())
      break;
  }
  return out;
}

long UnitCharacter::order() const
{
  long o = 1;
  for (std::size_t i = 0; i < _exps.size(); ++i)
    o = lcm(o, _orders[i] / gcd(_exps[i], _orders[i]));
  return o;
}

std::vector<Cyclotomic> UnitCharacter::table() const
{
  std::vector<Cyclotomic> t(_m, Cyclotomic(0));
  std::vector<long> e(_gens.size(), 0);
  while (true) {
    long a = 1 % _m;
    Cyclotomic v(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (long k = 0; k < e[i]; ++k)
        a = a * _gens[i] % _m;
      v *= Cyclotomic::root_of_unity(static_cast<int>(_orders[i]), _exps[i] * e[i]);
    }
    t[a] = v;
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == _orders[i])
      e[i++] = 0;
    if (i == e.size())
      break;
  }
  return t;
}

Cyclotomic UnitCharacter::operator()(long a) const
{
  return table()[mod(a, _m)];
}

long UnitCharacter::conductor() const
{
  auto t = table();
  for (int d : divisors(static_cast<int>(_m))) {
    bool ok = true;
    for (long a = 1; a < _m && ok; a += d)
      if (gcd(a, _m) == 1 && t[a] != Cyclotomic(1))
        ok = false;
    if (ok)
      return d;
  }
  return _m;
}

UnitCharacter UnitCharacter::factor(long d) const
{
  if (d < 1 || _m % d != 0 || gcd(d, _m / d) != 1)
    throw DomainError(std::to_string(d) + " is not a coprime factor of " + std::to_string(_m));
  auto t = table();
  std::vector<Cyclotomic> u(d, Cyclotomic(0));
  for (long a = 0; a < d; ++a)
    if (gcd(a, d) == 1)
      u[a] = t[crt_one(a, d, _m)];
  return from_values(d, u);
}

std::string UnitCharacter::to_string() const
{
  std::string s = "mod " + std::to_string(_m) + " [";
  for (std::size_t i = 0; i < _exps.size(); ++i)
    s += (i ? "," : "") + std::to_string(_exps[i]);
  return s + "]";
}

std::pair<UnitCharacter, UnitCharacter> p_split(UnitCharacter const &xi, int p)
{
  long mp = p_part(static_cast<int>(xi.modulus()), p);
  return {xi.factor(mp), xi.factor(xi.modulus() / mp)};
}

bool pprime_part_primitive(UnitCharacter const &xi, int p)
{
  return p_split(xi, p).second.is_primitive();
}

ClassFunction dirichlet_tilde(long m, UnitCharacter const &xi)
{
  if (xi.modulus() != m)
    throw DomainError("character has modulus " + std::to_string(xi.modulus()) + ", expected " +
                      std::to_string(m));
  auto g = cyclic_group(static_cast<int>(m));
  auto t = xi.table();
  std::vector<Cyclotomic> w(m);
  for (long k = 0; k < m; ++k)
    w[cyclic_element(static_cast<int>(m), k)] = gcd(k, m) == 1 ? t[k] : Cyclotomic(0);
  return ClassFunction::from_elements(g, w);
}

ClassFunction xi_mnp(long m, int n, int p, UnitCharacter const &xi)
{
  if (gcd(m, p) != 1)
    throw DomainError("m must be prime to p");
  if (xi.modulus() != m || !xi.is_primitive())
    throw DomainError("xi must be a primitive character mod " + std::to_string(m));
  long order = m;
  for (int i = 0; i < n; ++i)
    order *= p;
  auto g = cyclic_group(static_cast<int>(order));
  auto t = xi.table();
  std::vector<Cyclotomic> w(order);
  for (long k = 0; k < order; ++k)
    w[cyclic_element(static_cast<int>(order), k)] = gcd(k, order) == 1 ? t[k % m] : Cyclotomic(0);
  return ClassFunction::from_elements(g, w);
}

std::vector<ClassFunction> subfunctor_span(ClassFunction const &gen, GroupPtr const &h, Flavor flavor)
{
  auto b = goursat_basis(h, gen.group, flavor);
  Span<Cyclotomic> span(support_classes(*h, gen.p).size());
  for (auto const &c : b->classes()) {
    if (span.dim() == span.ambient_dim())
      break;
    span.insert(act(c, gen, flavor).values);
  }
  std::vector<ClassFunction> out;
  for (auto const &row : span.basis()) {
    ClassFunction f = ClassFunction::zero(h, gen.p);
    f.values = row;
    out.push_back(f);
  }
  return out;
}

} // namespace bisetkit
