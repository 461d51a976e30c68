#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"

namespace bisetkit {

/** One exact comparison. */
struct CheckRow
{
  std::string group;
  int p = 0;
  std::string quantity;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport
{
  std::string id;
  std::string title;
  std::string corpus;
  std::vector<CheckRow> rows;
  bool pass = false;
  double seconds = 0;
};

struct VerifyOptions
{
  std::vector<int> primes{2, 3};
  std::vector<GroupPtr> corpus;   // empty: default corpus
  std::uint64_t seed = 20240501;
  int random_pairs = 200;
};

std::vector<GroupPtr> default_corpus();
std::string describe_corpus(std::vector<GroupPtr> const &corpus);
// C_{m p^n} with gcd(m, p) = 1
std::vector<GroupPtr> cyclic_family(int p, int max_m = 15, int max_n = 2);

struct VerificationId
{
  std::string id;
  std::string title;
};
std::vector<VerificationId> const &verification_ids();
// accepts an id or its criterion number "1".."9"
std::string resolve_verification_id(std::string const &name);

VerificationReport run_verification(std::string const &id, VerifyOptions const &opts);

std::string report_to_json(VerificationReport const &r, int indent = 2);
VerificationReport report_from_json(std::string const &text);

} // namespace bisetkit
