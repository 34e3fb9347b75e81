#include <doctest.h>

#include "rookmn/census.hpp"
#include "rookmn/enumerate.hpp"

using namespace rookmn;

namespace {
Element el(Int d, Int k, Int m) { return Element::of(d, k, m); }
}  // namespace

TEST_CASE("all three pair-count routes agree on the hand-checked values") {
  const Int128 expected[] = {0, 1, 17, 118, 514, 1681};
  for (Int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(psi_direct_serial(n) == expected[n]);
    CHECK(psi_direct(n) == expected[n]);
    CHECK(psi_reduced_serial(n) == expected[n]);
    CHECK(psi_reduced(n) == expected[n]);
    CHECK(psi_conjecture(n) == expected[n]);
  }
}

TEST_CASE("routes and thread counts agree across a wider range") {
  for (Int n = 1; n <= 24; ++n) {
    CAPTURE(n);
    const Int128 reduced = psi_reduced_serial(n);
    CHECK(psi_direct_serial(n) == reduced);
    CHECK(psi_reduced(n, 3) == reduced);
    CHECK(psi_direct(n, 2) == reduced);
    CHECK(psi_conjecture(n) == reduced);
  }
  // The reduced route carries on far beyond the quadratic one.
  CHECK(psi_reduced(60) == psi_conjecture(60));
  CHECK(psi_reduced_serial(60) == psi_conjecture(60));
}

TEST_CASE("per-element compatible counts sum to the census") {
  for (Int n = 2; n <= 8; ++n) {
    Int128 total = 0;
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      if (x.is_zero()) continue;
      total += right_compatible_count(x, n);
    }
    CHECK(total == psi_reduced_serial(n));
  }

  // The identity composes with everything; a corner nilpotent with little.
  CHECK(right_compatible_count(el(0, 1, 2), 2) == 5);
  CHECK(right_compatible_count(el(1, 1, 1), 2) == 3);

  CHECK_THROWS_AS(right_compatible_count(Element::zero(), 3), ValidationError);
  CHECK_THROWS_AS(right_compatible_count(el(1, 1, 3), 3), ValidationError);
}

TEST_CASE("argument bounds are enforced") {
  CHECK_THROWS_AS(psi_direct_serial(0), ValidationError);
  CHECK_THROWS_AS(psi_reduced(census_max_n + 1), ValidationError);
  CHECK_THROWS_AS(ratio(1), ValidationError);
  CHECK_THROWS_AS(ratio_closed_form(1), ValidationError);
  CHECK_THROWS_AS(census_sweep(1, 5), ValidationError);
  CHECK_THROWS_AS(census_sweep(3, 2), ValidationError);
}

TEST_CASE("the survival ratio hits the known landmarks") {
  CHECK(ratio(2) == Rational(1, 2));
  CHECK(ratio(3) == Rational(7, 13));
  CHECK(ratio(3).to_decimal_string() == "0.5385");
  CHECK(ratio(4) == Rational(455, 841));

  // n = 4 is the unique maximum; the sequence decreases afterwards.
  const Rational peak = ratio(4);
  for (Int n = 2; n <= 40; ++n) {
    if (n == 4) continue;
    CHECK(ratio(n) < peak);
  }
  Rational prev = ratio(4);
  for (Int n = 5; n <= 40; ++n) {
    const Rational cur = ratio(n);
    CHECK(cur < prev);
    prev = cur;
  }
  // ... staying above the limiting value 21/40.
  CHECK(ratio(40) > Rational(21, 40));
}

TEST_CASE("the closed-form ratio equals the counted ratio everywhere tested") {
  for (Int n = 2; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(ratio_closed_form(n) == ratio(n));
  }
}

TEST_CASE("at n = 70 the ratio sits near its second-order approximation") {
  // 21/40 + (147/160)/70^2 = 21/40 + 147/784000 = 411747/784000.
  const Rational target(411747, 784000);
  const Rational actual = ratio(70);
  const Rational diff = actual > target ? actual - target : target - actual;
  CHECK(diff < Rational(1, 1000));
}

TEST_CASE("census sweeps assemble rows with cross-checks applied") {
  SweepOptions opts;
  opts.direct_budget = 4;
  const auto rows = census_sweep(2, 6, opts);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CensusRow& row = rows[i];
    CHECK(row.n == Int(i) + 2);
    CHECK(row.conjecture_ok);
    CHECK(row.psi_reduced == row.psi_conjecture);
    CHECK(row.ratio == row.ratio_closed_form);
    CHECK(row.psi_direct.has_value() == (row.n <= 4));
    if (row.psi_direct) CHECK(*row.psi_direct == row.psi_reduced);
  }
  CHECK(rows[0].psi_reduced == 17);
  CHECK(rows[3].psi_reduced == 1681);
}

TEST_CASE("csv and gnuplot renderings are exact and stable") {
  const auto rows = census_sweep(2, 3);
  CHECK(census_csv(rows) ==
        "n,psi_reduced,psi_conjecture,conjecture_ok,ratio,ratio_closed_form\n"
        "2,17,17,true,1/2,1/2\n"
        "3,118,118,true,7/13,7/13\n");
  CHECK(census_gnuplot(rows) ==
        "# n ratio\n"
        "2 0.500000\n"
        "3 0.538462\n");
}
