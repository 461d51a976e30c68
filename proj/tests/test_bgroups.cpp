#include "doctest.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "bisetkit/bgroups.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/subgroups.hpp"
#include "helpers.hpp"

using namespace bisetkit;

TEST_CASE("B-groups and minimal groups")
{
  for (auto name : {"C2", "C4", "D8", "Q8", "C2xC2", "C2xC4"})
    CHECK(is_bdelta_group(make_named(name), 2));
  for (auto name : {"C3", "C9", "C3xC3"})
    CHECK(is_bdelta_group(make_named(name), 3));

  CHECK_FALSE(is_bdelta_group(make_named("C3"), 2));
  CHECK_FALSE(is_bdelta_group(make_named("C5"), 3));
  CHECK(is_bdelta_group(make_named("C3xC3"), 2));
  CHECK(is_bdelta_group(make_named("C5xC5"), 3));

  CHECK(is_b_group(make_named("C2xC2")));
  CHECK(is_b_group(make_named("C3xC3")));
  for (auto name : {"C2", "C3", "C4", "C6", "C12"})
    CHECK_FALSE(is_b_group(make_named(name)));
  CHECK(is_b_group(make_named("S3")));

  // p'-groups: the two notions agree
  for (auto name : {"C3", "C3xC3", "C5", "C15", "C3xC5", "C9"})
    CHECK(is_bdelta_group(make_named(name), 2) == is_b_group(make_named(name)));
  for (auto name : {"C2", "C2xC2", "C4", "D10", "C2xC4"})
    CHECK(is_bdelta_group(make_named(name), 3) == is_b_group(make_named(name)));
}

TEST_CASE("beta delta")
{
  for (auto name : {"C4", "D8", "Q8", "C2xC2", "C8"}) {
    auto g = make_named(name);
    auto r = beta_delta(g, 2);
    CHECK(r.witness == 0);
    CHECK(r.beta_delta->iso_id() == g->iso_id());
  }

  // cyclic C_{m p^n}: deflate the whole p'-part
  for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{3, 2, 1}, {5, 2, 2}, {1, 3, 2}, {4, 3, 1}, {15, 2, 1}}) {
    int pn = 1;
    for (int i = 0; i < n; ++i)
      pn *= p;
    auto g = make_named("C" + std::to_string(m * pn));
    auto r = beta_delta(g, p);
    CHECK(r.beta_delta->iso_id() == make_named("C" + std::to_string(pn))->iso_id());
  }

  auto s3 = make_named("S3");
  CHECK(beta_delta(s3, 2).beta_delta->iso_id() == s3->iso_id());
  CHECK(beta_delta(s3, 2).witness == 0);

  // idempotence and invariants
  for (auto name : {"S3", "D12", "A4", "S4", "C2xC6", "C3xS3", "Dic12", "C6xC6"})
    for (int p : {2, 3}) {
      auto g = make_named(name);
      auto r = beta_delta(g, p);
      CHECK(is_bdelta_group(r.beta_delta, p));
      CHECK(beta_delta(r.beta_delta, p).beta_delta->iso_id() == r.beta_delta->iso_id());
      CHECK(is_b_group(r.classical_beta));
    }
}

TEST_CASE("gg relation")
{
  auto c6 = make_named("C6");
  auto c3 = make_named("C3");
  CHECK(gg_related(c6, c6, 2));
  CHECK(gg_related(c6, c3, 3));
  CHECK_FALSE(gg_related(c6, c3, 2));
}

TEST_CASE("e-delta bases")
{
  for (auto name : {"S3", "D8", "A4", "C2xC6"})
    for (int p : {2, 3}) {
      auto h = make_named(name);
      auto const &tab = h->subgroups();
      auto basis = e_delta_basis(make_named("C1"), h, p);
      CHECK(basis == tab.p_prime_classes(p));

      // the minimal quotient is trivial exactly on cyclic p'-subgroups
      auto const &types = beta_types(h, p);
      for (std::size_t c = 0; c < tab.class_count(); ++c) {
        auto const &s = tab[tab.class_rep(static_cast<int>(c))];
        CHECK((types[c] == make_named("C1")->iso_id()) == (s.cyclic && s.order % p != 0));
      }
    }

  auto v = make_named("C2xC2");
  auto b = e_delta_basis(v, v, 2);
  CHECK(b == std::vector<int>{4});
  auto s3 = make_named("S3");
  auto bs = e_delta_basis(s3, s3, 2);
  CHECK(std::find(bs.begin(), bs.end(), 3) != bs.end());
}

TEST_CASE("dimension formula for trivial coefficients")
{
  auto s3 = make_named("S3");
  CHECK(dim_simple_trivial(make_named("C1"), s3, 2) == 2);
  CHECK_THROWS_AS(dim_simple_trivial(make_named("C3"), s3, 2), DomainError);

  for (auto name : {"C2", "C4", "D8", "Q8", "C2xC2", "C8", "C2xC4"}) {
    auto g = make_named(name);
    CHECK(dim_simple_trivial(g, g, 2) == 1);
  }

  // partition identities
  for (auto name : {"S3", "D8", "Q8", "A4", "D12", "C2xC6", "S4", "C3xS3", "Dic12"})
    for (int p : {2, 3}) {
      auto h = make_named(name);
      std::map<int, long> per_type;
      for (int t : beta_types(h, p))
        ++per_type[t];
      long total = 0, pprime = 0;
      for (auto [t, cnt] : per_type) {
        auto gb = iso_type_rep(t);
        long d = dim_simple_trivial(gb, h, p);
        CHECK(d == cnt);
        total += d;
        if (gb->order() % p != 0)
          pprime += d;
      }
      CHECK(total == static_cast<long>(h->subgroups().class_count()));
      CHECK(pprime == static_cast<long>(h->subgroups().p_prime_classes(p).size()));
    }
}
