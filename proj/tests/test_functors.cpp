#include "doctest.h"

#include <random>

#include "bisetkit/bgroups.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/functors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/subgroups.hpp"

using namespace bisetkit;

namespace {

long primitive_characters(long m)
{
  long n = 0;
  for (auto const &x : UnitCharacter::all(m))
    n += x.is_primitive();
  return n;
}

CVector random_vector(std::size_t n, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> d(-3, 3);
  CVector v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(Cyclotomic(d(rng)) + Cyclotomic::root_of_unity(4, 1) * Cyclotomic(d(rng)));
  return v;
}

} // namespace

TEST_CASE("restriction kernels")
{
  auto kb = burnside_functor(Flavor::classical());
  CHECK(restriction_kernel(*kb, cyclic_group(1)).dim() == 1);

  for (int p : {2, 3}) {
    auto brauer = class_function_functor(p, Flavor::bifree(p));
    for (auto name : {"S3", "C4", "C2xC2", "D8", "C9", "A4", "Q8"}) {
      auto g = make_named(name);
      bool cyclic_pprime = g->is_cyclic() && g->order() % p != 0;
      if (!cyclic_pprime)
        CHECK(restriction_kernel(*brauer, g).dim() == 0);
    }
    for (long m = 1; m <= 14; ++m) {
      if (m % p == 0)
        continue;
      auto k = restriction_kernel(*brauer, cyclic_group(static_cast<int>(m)));
      CHECK(static_cast<long>(k.dim()) == primitive_characters(m));
      for (auto const &xi : UnitCharacter::all(m))
        CHECK(out_multiplicity(k, SimpleLabel::dirichlet(xi).xi) == (xi.is_primitive() ? 1 : 0));
    }
  }

  // trivial Out: multiplicity of the trivial character is the dimension
  auto s3 = make_named("S3");
  auto kb3 = restriction_kernel(*kb, s3);
  CHECK(out_multiplicity(kb3, SimpleLabel::trivial(s3).xi) == static_cast<long>(kb3.dim()));
}

TEST_CASE("image sums and splitting")
{
  auto complex = class_function_functor(0, Flavor::classical());
  CHECK(image_sum(*complex, cyclic_group(1)).empty());
  auto kb = burnside_functor(Flavor::classical());
  for (int p : {2, 3, 5}) {
    auto g = cyclic_group(p);
    // classical: inflation from G/G also reaches [G/G]
    CHECK(image_sum(*kb, g).size() == 2);
    auto kbd = burnside_functor(Flavor::bifree(p));
    auto j = image_sum(*kbd, g);
    REQUIRE(j.size() == 1);
    CHECK(j[0] == CVector{Cyclotomic(1)});
    CHECK(kbd->basis_labels(g).size() == 1);
  }
  for (int p : {2, 3}) {
    std::vector<FunctorPtr> fs{class_function_functor(0, Flavor::bifree(p)), class_function_functor(p, Flavor::bifree(p)),
                               class_function_functor(0, Flavor::classical())};
    for (auto const &f : fs)
      for (auto name : {"C1", "C2", "C6", "S3", "D8", "C3xC3", "A4", "Q8"}) {
        auto s = splitting(*f, make_named(name));
        CHECK(s.direct_sum());
      }
  }
}

TEST_CASE("verify condition")
{
  for (int p : {2, 3}) {
    auto brauer = class_function_functor(p, Flavor::bifree(p));
    for (auto name : {"C1", "C4", "C6", "S3", "D8", "A4", "C12", "Dic12"})
      CHECK(verify_condition(*brauer, make_named(name)));
  }
  auto bad = corrupted_functor(class_function_functor(2, Flavor::bifree(2)));
  CHECK_FALSE(verify_condition(*bad, make_named("S3")));

  for (long m : {3L, 4L, 5L}) {
    for (auto const &xi : UnitCharacter::all(m)) {
      if (!xi.is_primitive())
        continue;
      auto f = span_functor(dirichlet_tilde(m, xi), Flavor::classical());
      for (auto name : {"C6", "C12", "S3", "C4", "D8"})
        CHECK(verify_condition(*f, make_named(name)));
    }
  }
}

TEST_CASE("functor axioms per instance")
{
  std::mt19937_64 rng(21);
  std::vector<GroupPtr> groups{make_named("C2"), make_named("C3"), make_named("S3"), make_named("C4")};
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  std::vector<FunctorPtr> fs{burnside_functor(Flavor::classical()),
                             burnside_functor(Flavor::bifree(2)),
                             class_function_functor(0, Flavor::classical()),
                             class_function_functor(3, Flavor::bifree(3)),
                             span_functor(dirichlet_tilde(3, UnitCharacter::from_exponents(3, {1})), Flavor::classical())};
  for (auto const &f : fs) {
    for (int t = 0; t < 8; ++t) {
      auto a = groups[pick(rng)], b = groups[pick(rng)], c = groups[pick(rng)];
      auto x = BisetElt::basis_element(goursat_basis(a, b, f->flavor()),
                                       static_cast<int>(rng() % goursat_basis(a, b, f->flavor())->size()));
      auto y = BisetElt::basis_element(goursat_basis(b, c, f->flavor()),
                                       static_cast<int>(rng() % goursat_basis(b, c, f->flavor())->size()));
      CVector v;
      if (f->name().rfind("KB", 0) == 0) {
        for (std::size_t i = 0; i < f->dimension(c); ++i)
          v.emplace_back(static_cast<long>(rng() % 5) - 2);
      } else {
        v = random_vector(f->dimension(c), rng);
      }
      CHECK(f->act(compose(x, y), v) == f->act(x, f->act(y, v)));
      CHECK(f->act(BisetElt::identity(c, f->flavor()), v) == v);
    }
  }
}

TEST_CASE("simple functor dimensions")
{
  auto one = cyclic_group(1);
  CHECK(simple_dim(SimpleLabel::trivial(one), make_named("S3"), Flavor::bifree(2)) == 2);
  CHECK(simple_dim(SimpleLabel::trivial(one), make_named("D8"), Flavor::bifree(2)) == 1);

  for (long m : {3L, 4L, 5L, 7L, 8L}) {
    for (auto const &xi : UnitCharacter::all(m)) {
      if (!xi.is_primitive())
        continue;
      auto label = SimpleLabel::dirichlet(xi);
      CHECK(simple_dim(label, cyclic_group(static_cast<int>(m)), Flavor::classical()) == 1);
      for (int n = 1; n <= 16; ++n) {
        long d = simple_dim(label, cyclic_group(n), Flavor::classical());
        if (n % m != 0)
          CHECK(d == 0);
      }
    }
  }

  // agreement with the closed formula for trivial coefficients
  for (int p : {2, 3}) {
    for (auto name : {"C6", "S3", "D8", "C2xC2", "A4", "C3xC3", "Q8", "D12"}) {
      auto h = make_named(name);
      auto const &types = beta_types(h, p);
      std::vector<int> seen;
      for (int t : types) {
        if (std::find(seen.begin(), seen.end(), t) != seen.end())
          continue;
        seen.push_back(t);
        auto gb = iso_type_rep(t);
        CHECK(simple_dim(SimpleLabel::trivial(gb), h, Flavor::bifree(p)) == dim_simple_trivial(gb, h, p));
      }
    }
  }

  // isomorphic copies
  auto s3a = make_named("S3"), s3b = make_named("D6"), s3c = make_named("[(1,2,3),(1,2)]");
  auto c3 = cyclic_group(3);
  for (auto const &h : {s3a, s3b, s3c})
    CHECK(simple_dim(SimpleLabel::trivial(c3), h, Flavor::bifree(2)) ==
          simple_dim(SimpleLabel::trivial(c3), s3a, Flavor::bifree(2)));
  CHECK(simple_dim(SimpleLabel::trivial(s3b), make_named("D12"), Flavor::classical()) ==
        simple_dim(SimpleLabel::trivial(s3a), make_named("D12"), Flavor::classical()));

  CHECK_THROWS_AS(SimpleLabel(cyclic_group(3), CVector{Cyclotomic(1), Cyclotomic(2)}), DomainError);
}
