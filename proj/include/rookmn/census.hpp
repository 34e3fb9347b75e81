#ifndef ROOKMN_CENSUS_HPP
#define ROOKMN_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rookmn/element.hpp"
#include "rookmn/rational.hpp"

namespace rookmn {

// psi(n) counts the ordered pairs (x, y) of nonzero elements of M_n whose
// product is again nonzero. Three independent routes to the same number:
//
//   psi_direct     all |M_n \ {0}|^2 pairs, O(1) nonzero test per pair
//   psi_reduced    per (x, d') the admissible (k', m') region is a staircase
//                  whose size has a closed form, so the pair count collapses
//                  to an O(n) inner loop per x
//   psi_conjecture one polynomial evaluation
//
// The *_serial variants are the plain single-threaded reference loops; the
// unqualified versions split the outer loop across OpenMP threads (falling
// back to serial when built without OpenMP). threads <= 0 means "use the
// runtime default". All routes are exact and deterministic.

inline constexpr Int census_max_n = 10000;        // keeps (n+1)^7 within 128 bits
inline constexpr Int default_direct_budget = 24;  // largest n the quadratic route runs at

Int128 psi_direct_serial(Int n);
Int128 psi_direct(Int n, int threads = 0);
Int128 psi_reduced_serial(Int n);
Int128 psi_reduced(Int n, int threads = 0);

// ((n+1)^7 - n^7 - (n+1)^3 + n^3) / 120; the division is checked to be exact.
Int128 psi_conjecture(Int n);

// Number of nonzero y in M_n with x*y != 0. Summing this over all nonzero x
// gives psi(n). Throws on x = 0 or x invalid for n.
Int128 right_compatible_count(const Element& x, Int n);

// r(n) = (psi(n) - 2|S_n| + 1) / (|S_n| - 1)^2: of the (|S_n| - 1)^2 ordered
// pairs of nonzero elements of S_n, the fraction whose product is nonzero.
// (psi counts over M_n \ {0}; the correction removes the 2|S_n| - 1 pairs
// that involve the identity, all of which trivially multiply to nonzero.)
Rational ratio(Int n, int threads = 0);

// The same r(n) as one closed-form rational in n:
// 3(7n^5 + 28n^4 + 63n^3 + 18n^2 - 84n - 120) / (10(n-1)(2n^2 + 5n + 6)^2).
Rational ratio_closed_form(Int n);

struct CensusRow {
  Int n = 0;
  std::optional<Int128> psi_direct;  // only when n is within the direct budget
  Int128 psi_reduced = 0;
  Int128 psi_conjecture = 0;
  bool conjecture_ok = false;        // psi_reduced == psi_conjecture
  Rational ratio;                    // from psi_reduced
  Rational ratio_closed_form;
};

struct SweepOptions {
  Int direct_budget = default_direct_budget;  // run psi_direct for n <= this
  int threads = 0;                            // 0 = runtime default
};

// One row per n in [n_min, n_max]. Throws if the direct and reduced routes
// ever disagree (that is an internal bug, not a data point); a reduced vs.
// conjecture mismatch is recorded in conjecture_ok instead.
std::vector<CensusRow> census_sweep(Int n_min, Int n_max, const SweepOptions& options = {});

// n,psi_reduced,psi_conjecture,conjecture_ok,ratio,ratio_closed_form
// with the two ratio columns as exact fractions.
std::string census_csv(const std::vector<CensusRow>& rows);

// Two-column "n ratio" with a decimal ratio, ready for gnuplot.
std::string census_gnuplot(const std::vector<CensusRow>& rows);

}  // namespace rookmn

#endif  // ROOKMN_CENSUS_HPP
