#include "doctest.h"

#include "bisetkit/cyclotomic.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/rational.hpp"

using namespace bisetkit;

TEST_CASE("rational formatting")
{
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(frac(-4, 2)) == "-2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("cyclotomic polynomials")
{
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity")
{
  for (int e : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15}) {
    auto z = Cyclotomic::root_of_unity(e, 1);
    Cyclotomic p(1);
    for (int k = 0; k < e; ++k)
      p *= z;
    CHECK(p == Cyclotomic(1));

    Cyclotomic s;
    for (int k = 0; k < e; ++k)
      s += Cyclotomic::root_of_unity(e, k);
    CHECK(s == Cyclotomic(e == 1 ? 1 : 0));
  }

  auto w = Cyclotomic::root_of_unity(3, 1);
  CHECK(w * w == w.conj());
  CHECK(w + w.conj() == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(6, 2) == w);
}

TEST_CASE("cyclotomic field operations")
{
  auto z8 = Cyclotomic::root_of_unity(8, 1);
  auto x = z8 * z8 - z8;
  CHECK(x.to_string() == "z8^2 - z8");
  CHECK((x * x.inverse()) == Cyclotomic(1));
  CHECK(x.at_level(24).reduced() == x);
  CHECK(Cyclotomic(Rational(3, 2)).to_string() == "3/2");

  auto mixed = Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(4, 1);
  CHECK(mixed.level() == 12);
  CHECK(mixed.reduced() == Cyclotomic::root_of_unity(12, 7));

  // embedding then truncating back is the identity
  auto y = Cyclotomic::root_of_unity(5, 2) + Cyclotomic(Rational(1, 3));
  CHECK(y.at_level(15).reduced().level() == 5);
  CHECK(y.at_level(15).reduced() == y);
}

TEST_CASE("rational linear algebra")
{
  Matrix<Rational> a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(a) == 2);

  auto ns = nullspace(a, 3);
  REQUIRE(ns.size() == 1);
  auto z = mat_vec(a, ns[0]);
  for (auto const &v : z)
    CHECK(v == 0);

  auto sol = solve(a, Vector<Rational>{4, 8, 2}, 3);
  REQUIRE(sol);
  CHECK(mat_vec(a, *sol) == Vector<Rational>{4, 8, 2});
  CHECK_FALSE(solve(a, Vector<Rational>{1, 0, 0}, 3));

  Span<Rational> s(3);
  CHECK(s.insert({1, 1, 0}));
  CHECK(s.insert({0, 1, 1}));
  CHECK_FALSE(s.insert({1, 2, 1}));
  CHECK(s.contains({2, 3, 1}));
  CHECK(s.dim() == 2);
}

TEST_CASE("cyclotomic rank")
{
  auto w = Cyclotomic::root_of_unity(3, 1);
  Matrix<Cyclotomic> a{{1, w}, {w.conj(), 1}};
  CHECK(rank(a) == 1);
  Matrix<Cyclotomic> b{{1, w}, {w, 1}};
  CHECK(rank(b) == 2);
}

TEST_CASE("number theory helpers")
{
  CHECK(euler_phi(12) == 4);
  CHECK(p_part(24, 2) == 8);
  CHECK(p_prime_part(24, 2) == 3);
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}
