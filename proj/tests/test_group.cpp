#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "bisetkit/config.hpp"
#include "bisetkit/errors.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/isomorphism.hpp"
#include "bisetkit/sections.hpp"
#include "bisetkit/subgroups.hpp"

using namespace bisetkit;

namespace {

// brute-force check of the defining recursion of the Möbius function
void check_moebius(GroupPtr const &g)
{
  auto const &tab = g->subgroups();
  int n = static_cast<int>(tab.size());
  for (int k = 0; k < n; ++k)
    for (int h = 0; h < n; ++h) {
      if (!tab.contains(h, k))
        continue;
      int sum = 0;
      for (int x = 0; x < n; ++x)
        if (tab.contains(x, k) && tab.contains(h, x))
          sum += tab.moebius(x, h);
      CHECK(sum == (k == h ? 1 : 0));
    }
}

} // anonymous namespace

TEST_CASE("named groups")
{
  CHECK(make_named("C1")->order() == 1);

  auto s3 = make_named("S3");
  CHECK(s3->order() == 6);
  CHECK(s3->class_count() == 3);

  auto g = make_named("C2xC2xC3");
  CHECK(g->order() == 12);
  CHECK(g->is_abelian());

  CHECK(make_named("D8")->order() == 8);
  CHECK(make_named("Q8")->order() == 8);
  CHECK(make_named("Dic12")->order() == 12);
  CHECK(make_named("A5")->order() == 60);
  CHECK(make_named("D4")->order() == 4);
  CHECK(make_named("[(1,2,3),(1,2)]")->order() == 6);
  CHECK(make_named("[(1,2)(3,4),(1,3)(2,4)]")->order() == 4);

  CHECK_THROWS_AS(make_named("Z5"), ParseError);
  CHECK_THROWS_AS(make_named("D7"), ParseError);
  CHECK_THROWS_AS(make_named("C2x"), ParseError);
  CHECK_THROWS_AS(make_named("S7"), ParseError);

  auto old = order_bound();
  set_order_bound(100);
  CHECK_THROWS_AS(make_named("S5"), ResourceError);
  set_order_bound(old);
}

TEST_CASE("group axioms")
{
  for (auto name : {"S4", "Q8", "C3xS3", "Dic12"}) {
    auto g = make_named(name);
    int n = static_cast<int>(g->order());
    for (int a = 0; a < n; ++a) {
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->mul(0, a) == a);
      for (int b = 0; b < n; b += 3)
        for (int c = 0; c < n; c += 5)
          CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
  }
}

TEST_CASE("subgroup tables")
{
  auto cp = make_named("C5");
  CHECK(cp->subgroups().class_count() == 2);
  CHECK(cp->subgroups().moebius(0, 1) == -1);

  auto s3 = make_named("S3");
  auto const &t = s3->subgroups();
  CHECK(t.size() == 6);
  CHECK(t.class_count() == 4);
  // 1 - 1 - 3 from S3, C3 and the three C2 above the trivial subgroup
  CHECK(t.moebius(0, t.whole()) == 3);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[static_cast<int>(i)].order == 2)
      CHECK(t.moebius(static_cast<int>(i), t.whole()) == -1);

  auto v4 = make_named("C2xC2");
  CHECK(v4->subgroups().size() == 5);
  CHECK(v4->subgroups().class_count() == 5);
  CHECK(v4->subgroups().moebius(0, 4) == 2);

  CHECK(make_named("S4")->subgroups().size() == 30);
  CHECK(make_named("S4")->subgroups().class_count() == 11);
  CHECK(make_named("A5")->subgroups().size() == 59);
  CHECK(make_named("Q8")->subgroups().size() == 6);
  CHECK(make_named("C2xC2xC2")->subgroups().size() == 16);

  for (auto name : {"S3", "D8", "Q8", "A4", "C2xC6", "S4", "C3xS3"}) {
    auto g = make_named(name);
    auto const &tab = g->subgroups();
    std::size_t total = 0;
    for (std::size_t c = 0; c < tab.class_count(); ++c)
      total += g->order() / tab.subgroup_class(static_cast<int>(c)).normalizer_order;
    CHECK(total == tab.size());

    // fusion constant on conjugation orbits
    for (std::size_t i = 0; i < tab.size(); ++i)
      for (std::size_t x = 0; x < g->order(); ++x)
        CHECK(tab.class_of(tab.conjugate(static_cast<int>(x), static_cast<int>(i))) ==
              tab.class_of(static_cast<int>(i)));

    check_moebius(g);
  }
}

TEST_CASE("canonical order is deterministic")
{
  auto a = make_named("S4");
  auto b = make_named("S4");
  auto const &ta = a->subgroups();
  auto const &tb = b->subgroups();
  REQUIRE(ta.size() == tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    CHECK(ta[static_cast<int>(i)].elements == tb[static_cast<int>(i)].elements);
    CHECK(ta.class_of(static_cast<int>(i)) == tb.class_of(static_cast<int>(i)));
  }
  CHECK(a->table_hash() == b->table_hash());
}

TEST_CASE("p'-subgroup classes")
{
  auto s3 = make_named("S3");
  CHECK(p_prime_subgroup_classes(s3, 2).size() == 2);
  CHECK(p_prime_subgroup_classes(s3, 3).size() == 2);
  CHECK(p_prime_subgroup_classes(make_named("D8"), 2).size() == 1);
}

TEST_CASE("quotients")
{
  auto s3 = make_named("S3");
  auto const &t = s3->subgroups();
  CHECK(quotient(s3, s3->all()).group->order() == 1);

  int c3 = -1;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[static_cast<int>(i)].order == 3)
      c3 = static_cast<int>(i);
  CHECK(quotient(s3, t[c3].set).group->order() == 2);
  CHECK_THROWS_AS(quotient(s3, t[1].set), DomainError);

  auto c12 = make_named("C12");
  auto const &u = c12->subgroups();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[static_cast<int>(i)].order == 4) {
      auto q = quotient(c12, u[static_cast<int>(i)].set);
      CHECK(is_isomorphic(*q.group, *make_named("C3")));
      // projection is a homomorphism
      for (std::size_t a = 0; a < 12; ++a)
        for (std::size_t b = 0; b < 12; ++b)
          CHECK(q.projection[c12->mul(static_cast<int>(a), static_cast<int>(b))] ==
                q.group->mul(q.projection[a], q.projection[b]));
    }

  // third isomorphism theorem
  for (auto name : {"C12", "D12", "S4", "C2xC2xC3"}) {
    auto g = make_named(name);
    auto const &tab = g->subgroups();
    for (int n : tab.normal_subgroups())
      for (int m : tab.normal_subgroups()) {
        if (!tab.contains(m, n))
          continue;
        auto const &qn = quotient_of(g, n);
        ElementSet image(qn.group->order());
        for (int x : tab[m].elements)
          image.insert(qn.projection[x]);
        auto twice = quotient(qn.group, image);
        CHECK(is_isomorphic(*twice.group, *quotient_of(g, m).group));
      }
  }
}

TEST_CASE("automorphisms")
{
  for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12}) {
    auto g = make_named("C" + std::to_string(m));
    int phi = 0;
    for (int a = 1; a <= m; ++a)
      if (std::gcd(a, m) == 1)
        ++phi;
    CHECK(g->automorphisms().size() == static_cast<std::size_t>(phi));
    CHECK(g->automorphisms().out_size() == static_cast<std::size_t>(phi));
  }

  CHECK(make_named("C2")->automorphisms().out_size() == 1);
  CHECK(make_named("C2xC2")->automorphisms().out_size() == 6);
  CHECK(make_named("S3")->automorphisms().out_size() == 1);
  CHECK(make_named("D8")->automorphisms().size() == 8);
  CHECK(make_named("Q8")->automorphisms().size() == 24);
  CHECK(make_named("C2xC2xC2")->automorphisms().size() == 168);

  for (auto name : {"D8", "S4", "C2xC2", "A4", "C3xS3"}) {
    auto g = make_named(name);
    auto const &aut = g->automorphisms();
    CHECK(aut.inner_count() * g->center().count() == g->order());
    for (std::size_t a = 0; a < aut.size(); ++a) {
      CHECK(aut.inverse(static_cast<int>(a)) >= 0);
      for (std::size_t b = 0; b < aut.size(); ++b)
        CHECK(aut.compose(static_cast<int>(a), static_cast<int>(b)) >= 0);
    }
    // Out table is a group table
    for (std::size_t a = 0; a < aut.out_size(); ++a) {
      CHECK(aut.out_mul(0, static_cast<int>(a)) == static_cast<int>(a));
      CHECK(aut.out_mul(static_cast<int>(a), aut.out_inv(static_cast<int>(a))) == 0);
    }
  }
}

TEST_CASE("isomorphism tests")
{
  auto c6 = make_named("C6");
  auto c2c3 = make_named("C2xC3");
  auto w = find_isomorphism(*c6, *c2c3);
  REQUIRE(w);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      CHECK((*w)[c6->mul(static_cast<int>(a), static_cast<int>(b))] == c2c3->mul((*w)[a], (*w)[b]));

  CHECK_FALSE(is_isomorphic(*make_named("D8"), *make_named("Q8")));
  auto s4 = make_named("S4");
  auto id = find_isomorphism(*s4, *s4);
  REQUIRE(id);
  CHECK(is_isomorphic(*make_named("D12"), *make_named("C2xS3")));
  CHECK_FALSE(is_isomorphic(*make_named("D12"), *make_named("Dic12")));
  CHECK_FALSE(is_isomorphic(*make_named("A4"), *make_named("D12")));
}

TEST_CASE("iso labels")
{
  CHECK(iso_label(*make_named("C2xC3")) == "C6");
  CHECK(iso_label(*make_named("C2xC6")) == "C2xC6");
  CHECK(iso_label(*make_named("C4xC2")) == "C2xC4");
  CHECK(iso_label(*make_named("[(1,2,3),(1,2)]")) == "S3");
  CHECK(iso_label(*make_named("C2xS3")) == "D12");
  CHECK(make_named("C6")->iso_id() == make_named("C3xC2")->iso_id());
  CHECK(make_named("Q8")->iso_id() != make_named("D8")->iso_id());
}

TEST_CASE("sections")
{
  auto cp = make_named("C3");
  for (auto const *s : proper_sections(cp))
    CHECK(s->quotient_order() == 1);

  auto c4 = make_named("C4");
  std::vector<std::size_t> orders;
  for (auto const *s : proper_sections(c4))
    orders.push_back(s->quotient_order());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  CHECK(orders == std::vector<std::size_t>{1, 2});

  auto s3 = make_named("S3");
  std::vector<std::string> labels;
  for (auto const *s : proper_sections(s3))
    labels.push_back(iso_label(*s->quotient));
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  CHECK(labels == std::vector<std::string>{"C1", "C2", "C3"});

  for (auto name : {"S3", "D8", "A4", "C2xC4"}) {
    auto g = make_named(name);
    auto const &tab = g->subgroups();
    auto const &secs = g->sections();
    for (std::size_t i = 0; i < secs.size(); ++i) {
      auto const &s = secs[static_cast<int>(i)];
      CHECK(s.quotient_order() * tab[s.bottom].order == static_cast<std::size_t>(tab[s.top].order));
    }
    // every pair S normal in T is located
    for (std::size_t t = 0; t < tab.size(); ++t)
      for (std::size_t b = 0; b < tab.size(); ++b) {
        if (!tab.contains(static_cast<int>(t), static_cast<int>(b)))
          continue;
        bool normal = true;
        for (int x : tab[static_cast<int>(t)].elements)
          if (g->conjugate(x, tab[static_cast<int>(b)].set) != tab[static_cast<int>(b)].set)
            normal = false;
        if (!normal)
          continue;
        auto [sec, c] = secs.locate(static_cast<int>(t), static_cast<int>(b));
        CHECK(tab.conjugate(c, static_cast<int>(t)) == secs[sec].top);
        CHECK(tab.conjugate(c, static_cast<int>(b)) == secs[sec].bottom);
      }
  }
}
