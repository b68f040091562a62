#include "doctest.h"
#include "support/laws.hpp"

using namespace kuifje::testgen;

namespace {

void require_law(const LawReport& r) {
  INFO(r.name << ": " << r.failures << "/" << r.cases << " failed; " << r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("healthiness and algebra laws on random programs") {
  for (const auto& name : law_names()) {
    SUBCASE(name.c_str()) { require_law(run_law(name, 20261016, 100)); }
  }
}

TEST_CASE("oracle agrees with wpl on loop-free programs") { require_law(run_duality(7, 200)); }

TEST_CASE("greedy choice per history matches all strategies") { require_law(run_greedy_vs_exhaustive(11, 100)); }
