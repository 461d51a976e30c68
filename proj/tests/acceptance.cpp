// One line per acceptance criterion, exact comparisons over the default corpus with p = 2 and p = 3.
#include <iostream>

#include "bisetkit/verify.hpp"

using namespace bisetkit;

int main()
{
  VerifyOptions opts;
  bool all = true;
  auto const &ids = verification_ids();
  for (std::size_t n = 0; n < ids.size(); ++n) {
    VerificationReport r;
    std::string note;
    try {
      r = run_verification(ids[n].id, opts);
    } catch (std::exception const &e) {
      r.pass = false;
      note = std::string(" error: ") + e.what();
    }
    std::size_t failed = 0;
    for (auto const &c : r.rows)
      failed += !c.pass;
    std::cout << "criterion " << n + 1 << " [" << ids[n].id << "]: " << (r.pass ? "PASS" : "FAIL") << " ("
              << r.rows.size() << " checks, " << failed << " failed)" << note << std::endl;
    for (auto const &c : r.rows)
      if (!c.pass)
        std::cout << "    " << c.group << " p=" << c.p << " " << c.quantity << ": expected " << c.expected
                  << ", got " << c.computed << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
