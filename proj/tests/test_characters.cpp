#include "doctest.h"

#include <random>

#include "bisetkit/characters.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/subgroups.hpp"
#include "helpers.hpp"

using namespace bisetkit;

namespace {

ClassFunction random_cf(GroupPtr const &g, int p, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> d(-3, 3);
  auto f = ClassFunction::zero(g, p);
  int e = g->exponent();
  for (auto &v : f.values)
    v = Cyclotomic(d(rng)) + Cyclotomic::root_of_unity(e, d(rng)) * Cyclotomic(d(rng));
  return f;
}

BisetElt random_elt(BasisPtr const &b, std::mt19937_64 &rng)
{
  BisetElt x = BisetElt::zero(b->left(), b->right(), b->flavor());
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, b->size() - 1);
  for (int t = 0; t < 3; ++t)
    x.coeffs[pick(rng)] += coef(rng);
  return x;
}

std::vector<Cyclotomic> by_residue(ClassFunction const &f)
{
  int m = static_cast<int>(f.group->order());
  std::vector<Cyclotomic> out;
  for (int k = 0; k < m; ++k)
    out.push_back(f.at(cyclic_element(m, k)));
  return out;
}

long primitive_count(long m)
{
  long r = 1;
  for (int q : prime_factors(static_cast<int>(m))) {
    long a = 0, qa = 1;
    while (m % q == 0) {
      m /= q;
      qa *= q;
      ++a;
    }
    if (q == 2)
      r *= a == 1 ? 0 : a == 2 ? 1 : qa / 4;
    else
      r *= a == 1 ? q - 2 : (qa / q / q) * (q - 1) * (q - 1);
  }
  return r;
}

} // namespace

TEST_CASE("elementary class function actions")
{
  auto c2 = make_named("C2");
  auto reg = ClassFunction::zero(c2);
  reg.values = {Cyclotomic(2), Cyclotomic(0)};
  auto const &q = quotient_of(c2, c2->subgroups().whole());
  auto d = deflate_cf(q, reg);
  REQUIRE(d.values.size() == 1);
  CHECK(d.values[0] == Cyclotomic(1));

  std::mt19937_64 rng(5);
  for (auto name : {"S3", "D8", "C6", "A4"}) {
    auto g = make_named(name);
    for (int n : g->subgroups().normal_subgroups()) {
      auto const &qq = quotient_of(g, n);
      auto f = random_cf(qq.group, 0, rng);
      CHECK(deflate_cf(qq, inflate_cf(qq, f)) == f);
    }
  }

  auto s3 = make_named("S3");
  auto const &e = subgroup_of(s3, testing::subgroup_of_order(s3, 3));
  auto f = random_cf(e.sub, 0, rng);
  auto fl = Flavor::classical();
  auto x = compose(restriction_biset(e, fl), induction_biset(e, fl));
  auto g = act(x, f);
  auto const &c3 = *e.sub;
  for (std::size_t t = 0; t < c3.order(); ++t)
    CHECK(g.at(static_cast<int>(t)) == f.at(static_cast<int>(t)) + f.at(c3.inv(static_cast<int>(t))));

  // p-regular functions refuse p-kernels and classical elements
  auto f2 = ClassFunction::zero(c2, 2);
  CHECK_THROWS_AS(deflate_cf(q, f2), DomainError);
  CHECK_THROWS_AS(act(BisetElt::identity(c2, fl), f2), DomainError);
}

TEST_CASE("factorized action against the fixed-point formula")
{
  std::mt19937_64 rng(9);
  for (auto [a, b] : {std::pair{"S3", "C4"}, {"D8", "S3"}, {"C6", "C6"}, {"A4", "C3"}}) {
    auto h = make_named(a), g = make_named(b);
    for (int p : {0, 2, 3}) {
      auto fl = p ? Flavor::bifree(p) : Flavor::classical();
      auto basis = goursat_basis(h, g, fl);
      auto f = random_cf(g, p, rng);
      for (auto const &c : basis->classes())
        CHECK(act(c, f, fl) == act_fixed_points(c, f));
    }
  }
}

TEST_CASE("functoriality and compatibility")
{
  std::mt19937_64 rng(13);
  std::vector<GroupPtr> groups{make_named("C2"), make_named("C3"), make_named("S3"), make_named("C4"),
                               make_named("C6")};
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  for (int p : {0, 2, 3}) {
    auto fl = p ? Flavor::bifree(p) : Flavor::classical();
    for (int t = 0; t < 12; ++t) {
      auto a = groups[pick(rng)], b = groups[pick(rng)], c = groups[pick(rng)];
      auto x = random_elt(goursat_basis(a, b, fl), rng);
      auto y = random_elt(goursat_basis(b, c, fl), rng);
      auto f = random_cf(c, p, rng);
      CHECK(act(compose(x, y), f) == act(x, act(y, f)));
      if (p) {
        auto full = random_cf(c, 0, rng);
        CHECK(decomposition_map(act(y, full), p) == act(y, decomposition_map(full, p)));
      }
    }
  }

  // linearization commutes with the action on Burnside modules
  for (auto [a, b] : {std::pair{"S3", "C6"}, {"D8", "C4"}}) {
    auto h = make_named(a), g = make_named(b);
    auto basis = goursat_basis(h, g, Flavor::classical());
    for (auto const &c : basis->classes())
      for (std::size_t k = 0; k < g->subgroups().class_count(); ++k) {
        auto u = BurnsideElt::transitive(g, static_cast<int>(k));
        CHECK(linearize(act_on_burnside(c, u, Flavor::classical())) == act(c, linearize(u), Flavor::classical()));
      }
  }
}

TEST_CASE("decomposition map")
{
  auto c3 = make_named("C3");
  auto f = ClassFunction::zero(c3);
  f.values = {Cyclotomic(3), Cyclotomic::root_of_unity(3, 1), Cyclotomic(0)};
  auto d = decomposition_map(f, 2);
  CHECK(d.values == f.values);

  auto c2 = make_named("C2");
  auto reg = ClassFunction::zero(c2);
  reg.values = {Cyclotomic(2), Cyclotomic(0)};
  auto r = decomposition_map(reg, 2);
  CHECK(r.values == std::vector<Cyclotomic>{Cyclotomic(2)});

  auto c6 = make_named("C6");
  auto d6 = decomposition_map(ClassFunction::constant(c6, Cyclotomic(1)), 2);
  CHECK(d6.dimension() == 3);
  for (int c : d6.support())
    CHECK(c6->element_order(c6->class_reps()[c]) % 2 == 1);
}

TEST_CASE("unit characters")
{
  auto t1 = UnitCharacter::trivial(1);
  CHECK(t1.conductor() == 1);
  CHECK(t1.is_primitive());

  auto c4 = UnitCharacter::all(4);
  REQUIRE(c4.size() == 2);
  CHECK(c4[1].conductor() == 4);
  CHECK(c4[1].is_primitive());

  auto c6 = UnitCharacter::all(6);
  REQUIRE(c6.size() == 2);
  CHECK(c6[1].conductor() == 3);
  CHECK_FALSE(c6[1].is_primitive());

  for (long m = 1; m <= 40; ++m) {
    auto chars = UnitCharacter::all(m);
    CHECK(static_cast<long>(chars.size()) == euler_phi(static_cast<int>(m)));
    long prim = 0;
    for (auto const &x : chars) {
      prim += x.is_primitive();
      // values are multiplicative
      auto t = x.table();
      for (long a = 1; a < m; ++a)
        for (long b = 1; b < m; ++b)
          if (gcd(a, m) == 1 && gcd(b, m) == 1)
            CHECK(t[a * b % m] == t[a] * t[b]);
    }
    CHECK(prim == primitive_count(m));
  }

  for (long m : {12L, 20L, 24L, 36L}) {
    for (int p : {2, 3}) {
      for (auto const &x : UnitCharacter::all(m)) {
        auto [xp, xq] = p_split(x, p);
        auto t = x.table();
        for (long a = 1; a < m; ++a)
          if (gcd(a, m) == 1)
            CHECK(t[a] == xp(a) * xq(a));
        CHECK(pprime_part_primitive(x, p) == (xq.conductor() == xq.modulus()));
      }
    }
  }
  CHECK_THROWS_AS(UnitCharacter::from_exponents(8, {1}), DomainError);
}

TEST_CASE("Dirichlet class functions")
{
  auto d1 = dirichlet_tilde(1, UnitCharacter::trivial(1));
  CHECK(d1.values == std::vector<Cyclotomic>{Cyclotomic(1)});

  auto x3 = UnitCharacter::from_exponents(3, {1});
  CHECK(by_residue(dirichlet_tilde(3, x3)) == std::vector<Cyclotomic>{Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1)});
  auto x4 = UnitCharacter::from_exponents(4, {1});
  CHECK(by_residue(dirichlet_tilde(4, x4)) ==
        std::vector<Cyclotomic>{Cyclotomic(0), Cyclotomic(1), Cyclotomic(0), Cyclotomic(-1)});
  auto x5 = UnitCharacter::from_exponents(5, {1});
  auto v5 = by_residue(dirichlet_tilde(5, x5));
  CHECK(v5[2] == Cyclotomic::root_of_unity(4, 1));
  CHECK_THROWS_AS(dirichlet_tilde(4, x3), DomainError);

  CHECK(xi_mnp(3, 0, 2, x3) == dirichlet_tilde(3, x3));
  for (int p : {2, 3, 5}) {
    auto v = by_residue(xi_mnp(1, 1, p, UnitCharacter::trivial(1)));
    for (int k = 0; k < p; ++k)
      CHECK(v[k] == Cyclotomic(k == 0 ? 0 : 1));
  }
  CHECK(by_residue(xi_mnp(3, 1, 2, x3)) == std::vector<Cyclotomic>{Cyclotomic(0), Cyclotomic(1), Cyclotomic(0),
                                                                   Cyclotomic(0), Cyclotomic(0), Cyclotomic(-1)});
  CHECK_THROWS_AS(xi_mnp(6, 1, 2, UnitCharacter::trivial(6)), DomainError);
  CHECK_THROWS_AS(xi_mnp(6, 1, 5, UnitCharacter::from_exponents(6, {1})), DomainError);

  // pointwise product of the inflation with the linearized top idempotent
  for (auto [m, n, p] : {std::tuple{3, 1, 2}, {5, 1, 2}, {4, 1, 3}, {4, 2, 3}, {5, 2, 3}, {1, 3, 2}}) {
    long big = m;
    for (int i = 0; i < n; ++i)
      big *= p;
    auto g = cyclic_group(static_cast<int>(big));
    int kernel = g->subgroups().find_generated({cyclic_element(static_cast<int>(big), m)});
    auto const &q = quotient_of(g, kernel);
    Isomorphism f;
    f.source = cyclic_group(m);
    f.target = q.group;
    f.map.resize(m);
    for (int k = 0; k < m; ++k)
      f.map[cyclic_element(m, k)] = q.projection[cyclic_element(static_cast<int>(big), k)];
    for (auto const &xi : UnitCharacter::all(m)) {
      if (!xi.is_primitive())
        continue;
      auto inf = inflate_cf(q, transport_cf(f, dirichlet_tilde(m, xi)));
      auto e = linearize(idempotent(g, static_cast<int>(g->subgroups().class_count()) - 1));
      CHECK(xi_mnp(m, n, p, xi) == inf.pointwise(e));
    }
  }
}

TEST_CASE("subfunctor spans")
{
  for (auto name : {"S3", "D8", "A4", "C6", "Q8"}) {
    auto h = make_named(name);
    auto span = subfunctor_span(ClassFunction::constant(cyclic_group(1), Cyclotomic(1)), h, Flavor::classical());
    auto const &tab = h->subgroups();
    std::size_t cyclic_classes = 0;
    for (std::size_t c = 0; c < tab.class_count(); ++c)
      cyclic_classes += tab[tab.class_rep(static_cast<int>(c))].cyclic;
    CHECK(span.size() == cyclic_classes);
  }
  for (int p : {2, 3}) {
    auto span = subfunctor_span(dirichlet_tilde(1, UnitCharacter::trivial(1)), cyclic_group(p), Flavor::bifree(p));
    CHECK(span.size() == 1);
  }
  for (long m : {3L, 4L, 5L}) {
    auto gen = dirichlet_tilde(m, UnitCharacter::from_exponents(m, {1}));
    auto span = subfunctor_span(gen, gen.group, Flavor::classical());
    Span<Cyclotomic> s(gen.dimension());
    for (auto const &f : span)
      s.insert(f.values);
    CHECK(s.contains(gen.values));
  }
}
