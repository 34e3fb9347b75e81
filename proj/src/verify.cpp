#include "rookmn/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "rookmn/census.hpp"
#include "rookmn/diagram.hpp"
#include "rookmn/element.hpp"
#include "rookmn/enumerate.hpp"
#include "rookmn/matrix.hpp"

namespace rookmn {

namespace {

struct Check {
  const char* suite;
  const char* name;
  // Returns the coverage summary; throws ValidationError on failure.
  std::function<std::string(Int n_max, int threads)> run;
};

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

std::string range_note(Int hi, long long work, const char* unit) {
  return "n=2.." + std::to_string(hi) + ", " + std::to_string(work) + " " + unit;
}

// --- algebra ---------------------------------------------------------------

std::string check_product_validity(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 8);
  long long pairs = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      for (const Element& y : elems) {
        ++pairs;
        const Element p = multiply(x, y, amb);
        if (!is_valid(p, amb)) {
          fail("product " + to_string(x) + " * " + to_string(y) + " = " + to_string(p) +
               " escapes n=" + std::to_string(n));
        }
        if (is_nonzero_product(x, y) != !p.is_zero()) {
          fail("nonzero-product test disagrees with multiply at " + to_string(x) + ", " +
               to_string(y) + " (n=" + std::to_string(n) + ")");
        }
      }
    }
  }
  return range_note(hi, pairs, "pairs");
}

std::string check_associativity(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 5);
  long long triples = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      for (const Element& y : elems) {
        const Element xy = multiply(x, y, amb);
        for (const Element& z : elems) {
          ++triples;
          if (multiply(xy, z, amb) != multiply(x, multiply(y, z, amb), amb)) {
            fail("(" + to_string(x) + " " + to_string(y) + ") " + to_string(z) +
                 " != " + to_string(x) + " (" + to_string(y) + " " + to_string(z) + ")");
          }
        }
      }
    }
  }
  return range_note(hi, triples, "triples");
}

std::string check_identity_and_zero(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 8);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const Element one = Element::of(0, 1, n);
    const Element zero = Element::zero();
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      ++count;
      if (multiply(one, x, amb) != x || multiply(x, one, amb) != x) {
        fail("identity fails to fix " + to_string(x) + " at n=" + std::to_string(n));
      }
      if (!multiply(zero, x, amb).is_zero() || !multiply(x, zero, amb).is_zero()) {
        fail("zero fails to absorb " + to_string(x) + " at n=" + std::to_string(n));
      }
    }
  }
  return range_note(hi, count, "elements");
}

std::string check_power_consistency(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 6);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      Element acc = x;
      for (Int j = 1; j <= 2 * n + 2; ++j) {
        ++count;
        if (power(x, j, amb) != acc) {
          fail("power(" + to_string(x) + ", " + std::to_string(j) + ") != repeated product at n=" +
               std::to_string(n));
        }
        acc = multiply(acc, x, amb);
      }
    }
  }
  return range_note(hi, count, "powers");
}

std::string check_transpose_laws(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 6);
  long long pairs = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      if (transpose(transpose(x)) != x) fail("transpose not involutive at " + to_string(x));
      if (multiply(multiply(x, transpose(x), amb), x, amb) != x) {
        fail("x x^T x != x at " + to_string(x) + ", n=" + std::to_string(n));
      }
      for (const Element& y : elems) {
        ++pairs;
        if (transpose(multiply(x, y, amb)) !=
            multiply(transpose(y), transpose(x), amb)) {
          fail("(xy)^T != y^T x^T at " + to_string(x) + ", " + to_string(y) + ", n=" +
               std::to_string(n));
        }
      }
    }
  }
  return range_note(hi, pairs, "pairs");
}

std::string check_commutation_predicate(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 6);
  long long pairs = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      for (const Element& y : elems) {
        ++pairs;
        if (commutes(x, y, amb) != (multiply(x, y, amb) == multiply(y, x, amb))) {
          fail("commutation test wrong at " + to_string(x) + ", " + to_string(y) + ", n=" +
               std::to_string(n));
        }
      }
    }
  }
  return range_note(hi, pairs, "pairs");
}

std::string check_only_identity_invertible(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 6);
  long long pairs = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const Element one = Element::of(0, 1, n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      for (const Element& y : elems) {
        ++pairs;
        if (multiply(x, y, amb) == one && (x != one || y != one)) {
          fail(to_string(x) + " * " + to_string(y) + " = identity at n=" + std::to_string(n));
        }
      }
    }
  }
  return range_note(hi, pairs, "pairs");
}

// --- oracle ----------------------------------------------------------------

std::string check_matrix_roundtrip(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 8);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      ++count;
      const DenseRookMatrix M = to_matrix(x, n);
      if (from_matrix(M) != x) fail("matrix round-trip broke " + to_string(x));
      if (DenseRookMatrix::parse(M.to_text()) != M) {
        fail("matrix text round-trip broke " + to_string(x));
      }
    }
  }
  return range_note(hi, count, "elements");
}

std::string check_matrix_product(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 6);
  long long pairs = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      const DenseRookMatrix mx = to_matrix(x, n);
      for (const Element& y : elems) {
        ++pairs;
        if (to_matrix(multiply(x, y, amb), n) != mat_multiply(mx, to_matrix(y, n))) {
          fail("triplet and matrix products differ at " + to_string(x) + " * " + to_string(y) +
               ", n=" + std::to_string(n));
        }
      }
    }
  }
  return range_note(hi, pairs, "pairs");
}

std::string check_matrix_classification(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 8);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      ++count;
      const Classification c = classify(x, amb);
      const DenseRookMatrix M = to_matrix(x, n);
      if (c.kind == ElementKind::nilpotent || c.kind == ElementKind::zero_elem) {
        const auto index = mat_nilpotency_index(M);
        const Int expected = c.kind == ElementKind::zero_elem ? 1 : c.index;
        if (!index || *index != expected) {
          fail("matrix nilpotency index disagrees at " + to_string(x) + ", n=" +
               std::to_string(n));
        }
      } else if (mat_multiply(M, M) != M) {
        fail(to_string(x) + " classified idempotent but M^2 != M at n=" + std::to_string(n));
      }
    }
  }
  return range_note(hi, count, "elements");
}

std::string check_matrix_transpose(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 8);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      ++count;
      if (to_matrix(transpose(x), n) != to_matrix(x, n).transposed()) {
        fail("triplet and matrix transpose differ at " + to_string(x) + ", n=" +
             std::to_string(n));
      }
    }
  }
  return range_note(hi, count, "elements");
}

// --- counts ----------------------------------------------------------------

std::string check_order_formulas(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 30);
  static const FamilyTag closed_form[] = {
      FamilyTag::mn, FamilyTag::sn, FamilyTag::ut, FamilyTag::sut, FamilyTag::uf,
      FamilyTag::suf, FamilyTag::lt, FamilyTag::slt, FamilyTag::lf, FamilyTag::slf,
      FamilyTag::diag};
  long long families = 0;
  for (Int n = 2; n <= hi; ++n) {
    for (FamilyTag tag : closed_form) {
      ++families;
      const FamilyId family{tag};
      const auto members = enumerate(n, family);
      const auto expected = order_formula(n, family);
      if (!expected || static_cast<Int>(members.size()) != *expected) {
        fail(family.name() + " order formula mismatch at n=" + std::to_string(n) + ": counted " +
             std::to_string(members.size()));
      }
    }
    // No closed form for B, but its size is known by construction: one
    // element per (row, column) position, plus zero.
    if (static_cast<Int>(enumerate(n, FamilyId{FamilyTag::brandt}).size()) != n * n + 1) {
      fail("B order mismatch at n=" + std::to_string(n));
    }
  }
  return range_note(hi, families, "family/size checks");
}

std::string check_classification_counts(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 30);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    Int idem = 0;
    Int nilp = 0;
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::sn})) {
      ++count;
      if (x.is_zero()) {  // idempotent and nilpotent at once
        ++idem;
        ++nilp;
        continue;
      }
      switch (classify(x, amb).kind) {
        case ElementKind::idempotent: ++idem; break;
        case ElementKind::nilpotent: ++nilp; break;
        default:
          fail(to_string(x) + " classified as neither idempotent nor nilpotent in n=" +
               std::to_string(n));
      }
    }
    if (idem != count_idempotents(n)) {
      fail("idempotent count " + std::to_string(idem) + " != formula at n=" + std::to_string(n));
    }
    if (nilp != count_nilpotents(n)) {
      fail("nilpotent count " + std::to_string(nilp) + " != formula at n=" + std::to_string(n));
    }
  }
  return range_note(hi, count, "elements");
}

std::string check_family_intersections(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 12);
  const auto intersect = [](const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                          canonical_less);
    return out;
  };
  for (Int n = 2; n <= hi; ++n) {
    const auto ut = enumerate(n, FamilyId{FamilyTag::ut});
    const auto lt = enumerate(n, FamilyId{FamilyTag::lt});
    if (intersect(ut, lt) != enumerate(n, FamilyId{FamilyTag::diag})) {
      fail("UT and LT intersection is not D at n=" + std::to_string(n));
    }
    const auto uf = enumerate(n, FamilyId{FamilyTag::uf});
    const auto lf = enumerate(n, FamilyId{FamilyTag::lf});
    const std::vector<Element> zero_and_one = {Element::zero(), Element::of(0, 1, n)};
    if (intersect(uf, lf) != zero_and_one) {
      fail("UF and LF intersection is not {0, identity} at n=" + std::to_string(n));
    }
    const auto sut = enumerate(n, FamilyId{FamilyTag::sut});
    const auto slt = enumerate(n, FamilyId{FamilyTag::slt});
    if (intersect(sut, slt) != std::vector<Element>{Element::zero()}) {
      fail("SUT and SLT intersection is not {0} at n=" + std::to_string(n));
    }
  }
  return "n=2.." + std::to_string(hi);
}

// --- roots -------------------------------------------------------------------

std::string check_root_existence(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 6);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      if (x.is_zero()) continue;
      for (Int j = 1; j <= n + 1; ++j) {
        ++count;
        const auto y = root(x, j, amb);
        if (y.has_value() != (x.triplet().d % j == 0)) {
          fail("root existence wrong for " + to_string(x) + ", j=" + std::to_string(j));
        }
        if (y && (power(*y, j, amb) != x || !is_valid(*y, amb))) {
          fail("root of " + to_string(x) + " fails to round-trip at j=" + std::to_string(j));
        }
      }
    }
  }
  return range_note(hi, count, "(x, j) cases");
}

std::string check_root_uniqueness(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 5);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      if (x.is_zero()) continue;
      for (Int j = 1; j <= 4; ++j) {
        ++count;
        Int found = 0;
        for (const Element& y : elems) {
          if (power(y, j, amb) == x) ++found;
        }
        if (found != (x.triplet().d % j == 0 ? 1 : 0)) {
          fail(to_string(x) + " has " + std::to_string(found) + " " + std::to_string(j) +
               "th roots at n=" + std::to_string(n));
        }
      }
    }
  }
  return range_note(hi, count, "(x, j) scans");
}

// --- generators --------------------------------------------------------------

std::string check_sut_generated(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 10);
  for (Int n = 2; n <= hi; ++n) {
    if (closure(generating_set_A(n), n) != enumerate(n, FamilyId{FamilyTag::sut})) {
      fail("A_n fails to generate the strict upper triangulars at n=" + std::to_string(n));
    }
  }
  return "n=2.." + std::to_string(hi);
}

std::string check_generators_minimal(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 8);
  for (Int n = 2; n <= hi; ++n) {
    if (!verify_minimality(n)) fail("A_n is not minimal at n=" + std::to_string(n));
  }
  return "n=2.." + std::to_string(hi);
}

std::string check_power_expressions(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 12);
  long long count = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::sut})) {
      ++count;
      const PowerExpression expr = express_as_power(x, n);
      const Triplet& g = expr.generator.triplet();
      if (g.d != 1 || g.m > n - 1 || !is_valid(expr.generator, amb)) {
        fail("power expression generator for " + to_string(x) + " is outside A_n");
      }
      if (power(expr.generator, expr.exponent, amb) != x) {
        fail("power expression for " + to_string(x) + " does not reproduce it");
      }
    }
  }
  return range_note(hi, count, "elements");
}

std::string check_suf_monogenic(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 12);
  for (Int n = 2; n <= hi; ++n) {
    const std::vector<Element> shift = {Element::of(1, 1, n - 1)};
    if (closure(shift, n) != enumerate(n, FamilyId{FamilyTag::suf})) {
      fail("the shift fails to generate the strict upper fulls at n=" + std::to_string(n));
    }
  }
  return "n=2.." + std::to_string(hi);
}

// --- census --------------------------------------------------------------------

std::string check_census_routes(Int n_max, int threads) {
  const Int hi = std::min<Int>(n_max, 16);
  for (Int n = 2; n <= hi; ++n) {
    const Int128 direct_serial = psi_direct_serial(n);
    const Int128 direct_par = psi_direct(n, threads);
    const Int128 reduced_serial = psi_reduced_serial(n);
    const Int128 reduced_par = psi_reduced(n, threads);
    const Int128 conjecture = psi_conjecture(n);
    if (direct_serial != direct_par || reduced_serial != reduced_par) {
      fail("serial and parallel pair counts differ at n=" + std::to_string(n));
    }
    if (direct_serial != reduced_serial || reduced_serial != conjecture) {
      fail("pair-count routes disagree at n=" + std::to_string(n) + ": direct=" +
           to_string(direct_serial) + " reduced=" + to_string(reduced_serial) + " polynomial=" +
           to_string(conjecture));
    }
  }
  return "n=2.." + std::to_string(hi) + ", 5 routes each";
}

std::string check_ratio_forms(Int n_max, int threads) {
  const Int hi = std::min<Int>(n_max, 70);
  std::optional<Rational> prev;
  for (Int n = 2; n <= hi; ++n) {
    const Rational r = ratio(n, threads);
    if (r != ratio_closed_form(n)) {
      fail("measured and closed-form ratios differ at n=" + std::to_string(n));
    }
    // Shape of the curve: one hump at n=4, then a strict slide toward 21/40
    // from above.
    if (n >= 3 && !(r > Rational(21, 40))) {
      fail("ratio does not stay above 21/40 at n=" + std::to_string(n));
    }
    if (prev && n <= 4 && !(*prev < r)) {
      fail("ratio fails to rise into the n=4 peak at n=" + std::to_string(n));
    }
    if (prev && n > 4 && !(r < *prev)) {
      fail("ratio fails to decrease past the peak at n=" + std::to_string(n));
    }
    prev = r;
  }
  return "n=2.." + std::to_string(hi);
}

std::string check_rcc_sum(Int n_max, int threads) {
  const Int hi = std::min<Int>(n_max, 12);
  for (Int n = 2; n <= hi; ++n) {
    Int128 total = 0;
    for (const Element& x : enumerate(n, FamilyId{FamilyTag::mn})) {
      if (!x.is_zero()) total += right_compatible_count(x, n);
    }
    if (total != psi_reduced(n, threads)) {
      fail("per-element compatibility counts fail to sum to the pair count at n=" +
           std::to_string(n));
    }
  }
  return "n=2.." + std::to_string(hi);
}

// --- diagrams --------------------------------------------------------------------

std::string check_composite_edges(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 5);
  long long pairs = 0;
  for (Int n = 2; n <= hi; ++n) {
    const Ambient amb = Ambient::finite(n);
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      for (const Element& y : elems) {
        ++pairs;
        if (product_composite_edges(x, y, n) != layout(multiply(x, y, amb), n).edges) {
          fail("traced composite differs from product edges at " + to_string(x) + " * " +
               to_string(y) + ", n=" + std::to_string(n));
        }
      }
    }
  }
  return range_note(hi, pairs, "pairs");
}

std::string check_render_determinism(Int n_max, int) {
  const Int hi = std::min<Int>(n_max, 6);
  long long renders = 0;
  for (Int n = 2; n <= hi; ++n) {
    const auto elems = enumerate(n, FamilyId{FamilyTag::mn});
    for (const Element& x : elems) {
      ++renders;
      if (render_ascii(x, n) != render_ascii(x, n) || render_svg(x, n) != render_svg(x, n)) {
        fail("rendering is not deterministic for " + to_string(x));
      }
    }
    const Element& a = elems[1];
    const Element& b = elems[elems.size() / 2];
    if (render_product(a, b, n) != render_product(a, b, n)) {
      fail("product rendering is not deterministic at n=" + std::to_string(n));
    }
  }
  return range_note(hi, renders, "renders");
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"algebra", "product_validity", check_product_validity},
      {"algebra", "associativity", check_associativity},
      {"algebra", "identity_and_zero", check_identity_and_zero},
      {"algebra", "power_consistency", check_power_consistency},
      {"algebra", "transpose_laws", check_transpose_laws},
      {"algebra", "commutation_predicate", check_commutation_predicate},
      {"algebra", "only_identity_invertible", check_only_identity_invertible},
      {"oracle", "matrix_roundtrip", check_matrix_roundtrip},
      {"oracle", "matrix_product", check_matrix_product},
      {"oracle", "matrix_classification", check_matrix_classification},
      {"oracle", "matrix_transpose", check_matrix_transpose},
      {"counts", "order_formulas", check_order_formulas},
      {"counts", "classification_counts", check_classification_counts},
      {"counts", "family_intersections", check_family_intersections},
      {"roots", "root_existence", check_root_existence},
      {"roots", "root_uniqueness", check_root_uniqueness},
      {"generators", "sut_generated", check_sut_generated},
      {"generators", "generators_minimal", check_generators_minimal},
      {"generators", "power_expressions", check_power_expressions},
      {"generators", "suf_monogenic", check_suf_monogenic},
      {"census", "census_routes", check_census_routes},
      {"census", "ratio_forms", check_ratio_forms},
      {"census", "rcc_sum", check_rcc_sum},
      {"diagrams", "composite_edges", check_composite_edges},
      {"diagrams", "render_determinism", check_render_determinism},
  };
  return checks;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const Check& check : all_checks()) {
    if (names.empty() || names.back() != check.suite) names.emplace_back(check.suite);
  }
  names.emplace_back("all");
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, Int n_max, int threads) {
  if (n_max < 2) throw ValidationError("verify requires n_max >= 2");
  bool known = suite == "all";
  for (const Check& check : all_checks()) {
    if (suite == check.suite) known = true;
  }
  if (!known) {
    std::string names;
    for (const std::string& name : verify_suite_names()) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    throw ValidationError("unknown suite '" + suite + "'; expected one of " + names);
  }

  std::vector<CheckResult> results;
  for (const Check& check : all_checks()) {
    if (suite != "all" && suite != check.suite) continue;
    CheckResult result;
    result.name = std::string(check.suite) + "/" + check.name;
    try {
      result.detail = check.run(n_max, threads);
      result.ok = true;
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace rookmn
