#include "doctest.h"

#include <random>

#include "bisetkit/burnside.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/subgroups.hpp"
#include "helpers.hpp"

using namespace bisetkit;
using testing::class_of_order;
using testing::subgroup_of_order;

namespace {

std::vector<std::string> const small_corpus{"C1", "C2", "C3", "C4", "C6", "S3", "C2xC2", "D8", "Q8",
                                            "A4", "D12", "C2xC6", "S4", "C3xS3"};

BurnsideElt random_elt(GroupPtr const &g, std::mt19937 &rng)
{
  std::uniform_int_distribution<int> d(-3, 3);
  auto x = BurnsideElt::zero(g);
  for (auto &c : x.coeffs)
    c = d(rng);
  return x;
}

} // anonymous namespace

TEST_CASE("marks")
{
  auto s3 = make_named("S3");
  int n = static_cast<int>(s3->subgroups().class_count());
  for (int h = 0; h < n; ++h)
    CHECK(mark(s3, n - 1, h) == 1);
  CHECK(mark(s3, 0, 0) == 6);
  CHECK(mark(s3, class_of_order(s3, 2), class_of_order(s3, 2)) == 1);

  CHECK(table_of_marks(make_named("C2")) == Matrix<Rational>{{2, 0}, {1, 1}});
  CHECK(table_of_marks(make_named("C1")) == Matrix<Rational>{{1}});
  CHECK(table_of_marks(make_named("C5")) == Matrix<Rational>{{5, 0}, {1, 1}});

  for (auto const &name : small_corpus) {
    auto g = make_named(name);
    auto const &m = table_of_marks(g);
    auto const &tab = g->subgroups();
    for (std::size_t k = 0; k < m.size(); ++k) {
      auto const &cls = tab.subgroup_class(static_cast<int>(k));
      CHECK(m[k][k] == frac(cls.normalizer_order, tab[cls.rep].order));
      for (std::size_t h = k + 1; h < m.size(); ++h)
        CHECK(m[k][h] == 0);
    }
  }
}

TEST_CASE("mark homomorphism and product oracle")
{
  std::mt19937 rng(7);
  for (auto const &name : small_corpus) {
    auto g = make_named(name);
    int n = static_cast<int>(g->subgroups().class_count());
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        auto a = BurnsideElt::transitive(g, k);
        auto b = BurnsideElt::transitive(g, l);
        CHECK(product(a, b) == product_by_orbits(g, k, l));
      }

    for (int t = 0; t < 5; ++t) {
      auto x = random_elt(g, rng);
      auto y = random_elt(g, rng);
      auto mx = marks_of(x), my = marks_of(y), mxy = marks_of(x * y);
      for (std::size_t i = 0; i < mx.size(); ++i)
        CHECK(mxy[i] == mx[i] * my[i]);
      CHECK(from_marks(g, mx) == x);
    }
  }
}

TEST_CASE("idempotents")
{
  auto c5 = make_named("C5");
  CHECK(idempotent(c5, 1) == BurnsideElt::identity(c5) - BurnsideElt::transitive(c5, 0) * frac(1, 5));
  auto c2 = make_named("C2");
  CHECK(idempotent(c2, 0) == BurnsideElt::transitive(c2, 0) * frac(1, 2));

  for (auto const &name : small_corpus) {
    auto g = make_named(name);
    int n = static_cast<int>(g->subgroups().class_count());
    auto sum = BurnsideElt::zero(g);
    for (int h = 0; h < n; ++h) {
      auto e = idempotent(g, h);
      CHECK(e == idempotent_moebius(g, h));
      CHECK(e * e == e);
      for (int k = 0; k < h; ++k)
        CHECK((e * idempotent(g, k)).is_zero());
      sum += e;
    }
    CHECK(sum == BurnsideElt::identity(g));
  }
}

TEST_CASE("deflation numbers")
{
  for (auto const &name : small_corpus) {
    auto g = make_named(name);
    CHECK(deflation_number(g, 0) == 1);
  }
  for (int q : {2, 3, 5, 7}) {
    auto g = make_named("C" + std::to_string(q));
    CHECK(deflation_number(g, 1) == frac(q - 1, q));
  }
  for (auto name : {"C2xC2", "C3xC3"}) {
    auto g = make_named(name);
    auto const &tab = g->subgroups();
    for (std::size_t i = 1; i + 1 < tab.size(); ++i)
      CHECK(deflation_number(g, static_cast<int>(i)) == 0);
  }
  auto s3 = make_named("S3");
  CHECK(deflation_number(s3, subgroup_of_order(s3, 3)) == 0);
  CHECK_THROWS_AS(deflation_number(s3, subgroup_of_order(s3, 2)), DomainError);

  // Def e^G_G = m e^{G/N}_{G/N}
  for (auto const &name : small_corpus) {
    auto g = make_named(name);
    auto const &tab = g->subgroups();
    auto top = idempotent(g, static_cast<int>(tab.class_count()) - 1);
    for (int n : tab.normal_subgroups()) {
      auto const &q = quotient_of(g, n);
      auto d = elementary_op(OpKind::def, &q, top);
      auto eq = idempotent(q.group, static_cast<int>(q.group->subgroups().class_count()) - 1);
      CHECK(d == eq * deflation_number(g, n));
    }
  }
}

TEST_CASE("elementary operations")
{
  auto s3 = make_named("S3");
  int c3 = subgroup_of_order(s3, 3);
  auto const &e = subgroup_of(s3, c3);

  // Res Ind [H/H] by the double coset formula: H\G/H has two cosets, both giving H
  auto hh = BurnsideElt::identity(e.sub);
  auto back = elementary_op(OpKind::res, &e, elementary_op(OpKind::ind, &e, hh));
  CHECK(back == hh * Rational(2));

  // def of [G/K] is [(G/N)/(KN/N)]
  auto const &q = quotient_of(s3, c3);
  auto t2 = BurnsideElt::transitive(s3, class_of_order(s3, 2));
  CHECK(deflate(q, t2) == BurnsideElt::identity(q.group));
  auto t1 = BurnsideElt::transitive(s3, 0);
  CHECK(deflate(q, t1) == BurnsideElt::transitive(q.group, 0));

  // inner automorphisms fix everything
  auto const &aut = s3->automorphisms();
  for (std::size_t a = 0; a < aut.size(); ++a) {
    Isomorphism f{s3, s3, aut[static_cast<int>(a)]};
    for (int k = 0; k < 4; ++k)
      CHECK(transport(f, BurnsideElt::transitive(s3, k)) == BurnsideElt::transitive(s3, k));
  }

  // p'-constraint in the bifree flavor
  auto c2 = make_named("C2");
  auto const &q2 = quotient_of(c2, 1);
  CHECK_THROWS_AS(elementary_op(OpKind::def, &q2, BurnsideElt::identity(c2), 2), DomainError);
  CHECK_NOTHROW(elementary_op(OpKind::def, &q2, BurnsideElt::identity(c2), 3));
  CHECK_THROWS_AS(elementary_op(OpKind::inf, &e, hh), DomainError);

  // restriction against the orbit count: Res^G_H [G/K] marks agree with marks at subgroups of H
  for (auto name : {"S4", "D12", "C2xC6"}) {
    auto g = make_named(name);
    auto const &tab = g->subgroups();
    for (std::size_t h = 0; h < tab.size(); ++h) {
      auto const &emb = subgroup_of(g, static_cast<int>(h));
      auto const &st = emb.sub->subgroups();
      for (std::size_t k = 0; k < tab.class_count(); ++k) {
        auto r = restrict_to(emb, BurnsideElt::transitive(g, static_cast<int>(k)));
        auto mr = marks_of(r);
        for (std::size_t c = 0; c < st.class_count(); ++c) {
          ElementSet img(g->order());
          for (int y : st[st.class_rep(static_cast<int>(c))].elements)
            img.insert(emb.to_parent[y]);
          int gc = tab.class_of(tab.find(img));
          CHECK(mr[c] == mark(g, static_cast<int>(k), gc));
        }
      }
    }
  }
}

TEST_CASE("p'-idempotent sum")
{
  auto d8 = make_named("D8");
  CHECK(pprime_idempotent_sum(d8, 2) == idempotent(d8, 0));
  auto c15 = make_named("C15");
  CHECK(pprime_idempotent_sum(c15, 2) == BurnsideElt::identity(c15));
  auto s3 = make_named("S3");
  CHECK(pprime_idempotent_sum(s3, 2) == idempotent(s3, 0) + idempotent(s3, class_of_order(s3, 3)));

  std::mt19937 rng(3);
  for (auto name : {"S3", "D12", "A4"})
    for (int p : {2, 3}) {
      auto g = make_named(name);
      auto e = pprime_idempotent_sum(g, p);
      for (int t = 0; t < 5; ++t) {
        auto x = random_elt(g, rng);
        for (std::size_t c = 0; c < x.coeffs.size(); ++c)
          if (g->subgroups()[g->subgroups().class_rep(static_cast<int>(c))].order % p == 0)
            x.coeffs[c] = 0;
        CHECK(x.in_pprime_span(p));
        CHECK(e * x == x);
      }
    }
}

TEST_CASE("orbit pairing")
{
  for (auto const &name : small_corpus) {
    auto g = make_named(name);
    auto one = BurnsideElt::identity(g);
    auto reg = BurnsideElt::transitive(g, 0);
    CHECK(orbit_pairing(one, one) == 1);
    CHECK(orbit_pairing(reg, reg) == Rational(static_cast<long>(g->order())));

    auto const &tab = g->subgroups();
    for (std::size_t h = 0; h < tab.class_count(); ++h) {
      auto e = idempotent(g, static_cast<int>(h));
      CHECK(orbit_pairing(e, e) ==
            frac(generator_count(g, static_cast<int>(h)),
                     tab.subgroup_class(static_cast<int>(h)).normalizer_order));
    }
  }
}

TEST_CASE("linearization")
{
  for (auto const &name : small_corpus) {
    auto g = make_named(name);
    auto one = linearize(BurnsideElt::identity(g));
    CHECK(one == ClassFunction::constant(g, 1));

    auto reg = linearize(BurnsideElt::transitive(g, 0));
    CHECK(reg.values[0] == Cyclotomic(static_cast<long>(g->order())));
    for (std::size_t c = 1; c < reg.values.size(); ++c)
      CHECK(reg.values[c].is_zero());

    auto top = linearize(idempotent(g, static_cast<int>(g->subgroups().class_count()) - 1));
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      bool gen = static_cast<std::size_t>(g->element_order(g->class_reps()[c])) == g->order();
      CHECK(top.values[c] == Cyclotomic(gen ? 1 : 0));
    }
  }

  auto c2 = make_named("C2");
  auto e = linearize(idempotent(c2, 1));
  CHECK(e.values == std::vector<Cyclotomic>{0, 1});
}
