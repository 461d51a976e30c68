#include "doctest.h"

#include "bisetkit/errors.hpp"
#include "bisetkit/verify.hpp"

using namespace bisetkit;

TEST_CASE("verification ids resolve from numbers and names")
{
  REQUIRE(verification_ids().size() == 9);
  CHECK(resolve_verification_id("1") == verification_ids()[0].id);
  CHECK(resolve_verification_id("9") == verification_ids()[8].id);
  CHECK(resolve_verification_id("brauer") == "brauer");
  CHECK_THROWS(resolve_verification_id("10"));
  CHECK_THROWS(resolve_verification_id("nonsense"));
}

TEST_CASE("report json round trip")
{
  VerifyOptions o;
  o.corpus = {make_named("S3"), make_named("C6")};
  auto r = run_verification("trivial-simple-sum", o);
  CHECK(r.pass);
  CHECK(!r.rows.empty());
  auto back = report_from_json(report_to_json(r));
  CHECK(back.id == r.id);
  CHECK(back.title == r.title);
  CHECK(back.corpus == r.corpus);
  CHECK(back.pass == r.pass);
  REQUIRE(back.rows.size() == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(back.rows[i].group == r.rows[i].group);
    CHECK(back.rows[i].p == r.rows[i].p);
    CHECK(back.rows[i].quantity == r.rows[i].quantity);
    CHECK(back.rows[i].expected == r.rows[i].expected);
    CHECK(back.rows[i].computed == r.rows[i].computed);
    CHECK(back.rows[i].pass == r.rows[i].pass);
  }
  CHECK(report_to_json(back) == report_to_json(r));
}

TEST_CASE("small corpus verifications")
{
  VerifyOptions o;
  o.corpus = {make_named("C1"), make_named("C4"), make_named("S3"), make_named("C2xC2")};
  o.random_pairs = 20;
  for (auto const &v : verification_ids())
    CHECK_MESSAGE(run_verification(v.id, o).pass, v.id);
}

TEST_CASE("malformed report json is a parse error")
{
  CHECK_THROWS_AS(report_from_json("{"), ParseError);
}
