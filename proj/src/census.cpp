#include "rookmn/census.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstddef>

namespace rookmn {

namespace {

void check_census_n(Int n) {
  if (n < 1 || n > census_max_n) {
    throw ValidationError("census n must be in [1, " + std::to_string(census_max_n) +
                          "], got " + std::to_string(n));
  }
}

int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// All nonzero elements of M_n in canonical order, as bare triplets.
std::vector<Triplet> nonzero_triplets(Int n) {
  std::vector<Triplet> out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1) * (2 * n + 1) / 6);
  for (Int d = -(n - 1); d <= n - 1; ++d) {
    const Int k_lo = 1 - std::min<Int>(0, d);
    const Int m_hi = n - std::max<Int>(0, d);
    for (Int k = k_lo; k <= m_hi; ++k) {
      for (Int m = k; m <= m_hi; ++m) out.push_back(Triplet{d, k, m});
    }
  }
  return out;
}

// Number of nonzero y = <d',k',m'> with x*y != 0, for one fixed d'.
// x*y != 0 iff k' - m <= d <= m' - k', i.e. k' <= m + d and m' >= k + d,
// intersected with validity 1 - min(0,d') <= k' <= m' <= n - max(0,d').
// Splitting on whether k' reaches k + d turns the (k', m') double count
// into one rectangle plus one arithmetic series.
Int128 right_compatible_with(Int n, Int d, Int k, Int m, Int dp) {
  const Int lo = 1 - std::min<Int>(0, dp);
  const Int up = n - std::max<Int>(0, dp);
  const Int hi = std::min(m + d, up);  // largest admissible k'
  if (hi < lo) return 0;
  const Int t = k + d;  // m' must reach t
  if (t > up) return 0;

  Int128 total = 0;
  // k' <= t: m' ranges over [t, up] independently of k'.
  const Int flat = std::max<Int>(0, std::min(hi, t) - lo + 1);
  total += Int128{flat} * (up - t + 1);
  // k' > t: m' ranges over [k', up], a count that decreases by 1 per step.
  const Int s = std::max(lo, t + 1);
  if (s <= hi) {
    const Int first = up + 1 - s;
    const Int last = up + 1 - hi;
    total += Int128{first + last} * (hi - s + 1) / 2;
  }
  return total;
}

Int128 right_compatible_all(Int n, const Triplet& x) {
  Int128 total = 0;
  for (Int dp = -(n - 1); dp <= n - 1; ++dp) {
    total += right_compatible_with(n, x.d, x.k, x.m, dp);
  }
  return total;
}

}  // namespace

Int128 psi_direct_serial(Int n) {
  check_census_n(n);
  const std::vector<Triplet> elems = nonzero_triplets(n);
  Int128 total = 0;
  for (const Triplet& x : elems) {
    Int count = 0;
    for (const Triplet& y : elems) count += nonzero_product(x, y) ? 1 : 0;
    total += count;
  }
  return total;
}

Int128 psi_direct(Int n, int threads) {
  check_census_n(n);
  const std::vector<Triplet> elems = nonzero_triplets(n);
  const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(elems.size());
  Int128 total = 0;
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    Int128 local = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      const Triplet& x = elems[static_cast<std::size_t>(i)];
      Int count = 0;
      for (const Triplet& y : elems) count += nonzero_product(x, y) ? 1 : 0;
      local += count;
    }
    // Integer addition is exact, so the merge order cannot change the sum.
#pragma omp critical
    total += local;
  }
  return total;
}

Int128 psi_reduced_serial(Int n) {
  check_census_n(n);
  Int128 total = 0;
  for (Int d = -(n - 1); d <= n - 1; ++d) {
    const Int k_lo = 1 - std::min<Int>(0, d);
    const Int m_hi = n - std::max<Int>(0, d);
    for (Int k = k_lo; k <= m_hi; ++k) {
      for (Int m = k; m <= m_hi; ++m) {
        total += right_compatible_all(n, Triplet{d, k, m});
      }
    }
  }
  return total;
}

Int128 psi_reduced(Int n, int threads) {
  check_census_n(n);
  const std::vector<Triplet> elems = nonzero_triplets(n);
  const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(elems.size());
  Int128 total = 0;
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    Int128 local = 0;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      local += right_compatible_all(n, elems[static_cast<std::size_t>(i)]);
    }
#pragma omp critical
    total += local;
  }
  return total;
}

Int128 psi_conjecture(Int n) {
  check_census_n(n);
  const auto pow7 = [](Int128 v) {
    const Int128 v3 = v * v * v;
    return v3 * v3 * v;
  };
  const Int128 a = n;
  const Int128 numerator = pow7(a + 1) - pow7(a) - (a + 1) * (a + 1) * (a + 1) + a * a * a;
  if (numerator % 120 != 0) {
    throw ValidationError("psi polynomial numerator not divisible by 120 at n=" +
                          std::to_string(n));
  }
  return numerator / 120;
}

Int128 right_compatible_count(const Element& x, Int n) {
  check_census_n(n);
  if (n < 2) throw ValidationError("right_compatible_count requires n >= 2");
  if (x.is_zero()) {
    throw ValidationError("right_compatible_count is defined for nonzero elements only");
  }
  if (!is_valid(x, Ambient::finite(n))) {
    throw ValidationError(to_string(x) + " is not valid for n=" + std::to_string(n));
  }
  return right_compatible_all(n, x.triplet());
}

namespace {

Rational ratio_from_psi(Int n, Int128 psi) {
  const Int128 s_order = Int128{n} * (n + 1) * (2 * n + 1) / 6;  // |S_n|, zero included
  const Int128 nonzero = s_order - 1;
  return Rational(psi - 2 * s_order + 1, nonzero * nonzero);
}

}  // namespace

Rational ratio(Int n, int threads) {
  if (n < 2) throw ValidationError("ratio requires n >= 2");
  return ratio_from_psi(n, psi_reduced(n, threads));
}

Rational ratio_closed_form(Int n) {
  if (n < 2) throw ValidationError("ratio_closed_form requires n >= 2");
  check_census_n(n);
  const Int128 a = n;
  const Int128 numerator =
      3 * (7 * a * a * a * a * a + 28 * a * a * a * a + 63 * a * a * a + 18 * a * a - 84 * a - 120);
  const Int128 q = 2 * a * a + 5 * a + 6;
  const Int128 denominator = 10 * (a - 1) * q * q;
  return Rational(numerator, denominator);
}

std::vector<CensusRow> census_sweep(Int n_min, Int n_max, const SweepOptions& options) {
  if (n_min < 2) throw ValidationError("census sweep requires n_min >= 2");
  if (n_max < n_min) throw ValidationError("census sweep requires n_max >= n_min");
  check_census_n(n_max);

  std::vector<CensusRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (Int n = n_min; n <= n_max; ++n) {
    CensusRow row;
    row.n = n;
    row.psi_reduced = psi_reduced(n, options.threads);
    row.psi_conjecture = psi_conjecture(n);
    row.conjecture_ok = row.psi_reduced == row.psi_conjecture;
    row.ratio = ratio_from_psi(n, row.psi_reduced);
    row.ratio_closed_form = rookmn::ratio_closed_form(n);
    if (n <= options.direct_budget) {
      row.psi_direct = psi_direct(n, options.threads);
      if (*row.psi_direct != row.psi_reduced) {
        // The two loops count the same set; disagreement means a bug here,
        // not evidence about the polynomial.
        throw ValidationError("internal error: direct and reduced pair counts differ at n=" +
                              std::to_string(n) + " (" + to_string(*row.psi_direct) + " vs " +
                              to_string(row.psi_reduced) + ")");
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string out = "n,psi_reduced,psi_conjecture,conjecture_ok,ratio,ratio_closed_form\n";
  for (const CensusRow& row : rows) {
    out += std::to_string(row.n);
    out += ',' + to_string(row.psi_reduced);
    out += ',' + to_string(row.psi_conjecture);
    out += row.conjecture_ok ? ",true" : ",false";
    out += ',' + row.ratio.to_fraction_string();
    out += ',' + row.ratio_closed_form.to_fraction_string();
    out += '\n';
  }
  return out;
}

std::string census_gnuplot(const std::vector<CensusRow>& rows) {
  std::string out = "# n ratio\n";
  for (const CensusRow& row : rows) {
    out += std::to_string(row.n) + ' ' + row.ratio.to_decimal_string(6) + '\n';
  }
  return out;
}

}  // namespace rookmn
