#ifndef ROOKMN_ENUMERATE_HPP
#define ROOKMN_ENUMERATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rookmn/element.hpp"

namespace rookmn {

// Named subsemigroup families. Triangular/full/diagonal names follow the
// usual matrix-analysis sense; the parameterized tags carry d0 or the
// ones-count bound j.
enum class FamilyTag {
  mn,                        // the whole monoid
  sn,                        // monoid minus the identity
  ut,                        // upper triangular: d >= 0
  sut,                       // strictly upper triangular: d > 0
  uf,                        // upper full: d >= 0, k = 1, m = n - d
  suf,                       // strictly upper full: d > 0, k = 1, m = n - d
  lt,                        // lower triangular: d <= 0
  slt,                       // strictly lower triangular: d < 0
  lf,                        // lower full: d <= 0, k = 1 - d, m = n
  slf,                       // strictly lower full: d < 0, k = 1 - d, m = n
  diag,                      // diagonal: d = 0 (the idempotents)
  brandt,                    // single-entry matrices: m = k
  multiple_of_d0,            // d a multiple of d0, 1 <= d0 <= n - 1
  at_least_d0,               // d >= d0, 1 <= d0 <= n - 1
  zero_first_row_col,        // first row and first column zero
  zero_first_row_last_col,   // first row and last column zero
  at_most_j_ones,            // at most j ones, 2 <= j <= n
};

struct FamilyId {
  FamilyTag tag;
  Int param = 0;

  std::string name() const;
  // Accepts the canonical names (Mn, Sn, UT, SUT, UF, SUF, LT, SLT, LF, SLF,
  // D, B, ZeroFirstRowCol, ZeroFirstRowLastCol) and the parameterized forms
  // MultipleOfD0(q), AtLeastD0(q), AtMostJOnes(q).
  static FamilyId parse(std::string_view text);

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Throws ValidationError when the family's parameter is out of range for n.
void check_family(const FamilyId& family, Int n);

// Membership predicate on triplets, straight from the defining restrictions
// on d, k, m. Zero belongs to every family. pre: x valid under Finite(n).
bool family_contains(const FamilyId& family, const Element& x, Int n);

// All members in canonical order: zero first, then lexicographic by (d,k,m).
std::vector<Element> enumerate(Int n, const FamilyId& family);

// Closed-form order where one is known (Mn, Sn, UT, SUT, LT, SLT, UF, SUF,
// LF, SLF, D); nullopt for the families counted by enumeration only.
std::optional<Int> order_formula(Int n, const FamilyId& family);

// Idempotent/nilpotent counts in S_n; zero is both idempotent and nilpotent.
Int count_idempotents(Int n);  // n(n+1)/2
Int count_nilpotents(Int n);   // n^3/3 - n/3 + 1

// Least multiplication-closed superset of the generators, as a canonically
// sorted vector. Worklist/BFS; zero enters on the first zero product.
std::vector<Element> closure(const std::vector<Element>& generators, Int n);

// A_n = {<1,k,m> : 1 <= k <= m <= n-1}, the minimal generating set of SUT_n.
std::vector<Element> generating_set_A(Int n);

struct PowerExpression {
  Element generator;
  Int exponent;
};

// Writes x in SUT_n as a power of a single A_n generator:
// zero = <1,1,1>^2, <d,k,m> = <1,k,m+d-1>^d. Throws when x is not in SUT_n.
PowerExpression express_as_power(const Element& x, Int n);

// True iff dropping any single generator from A_n fails to generate SUT_n.
bool verify_minimality(Int n);

struct CayleyTable {
  std::vector<Element> elements;
  std::vector<std::vector<Element>> products;  // products[i][j] = elements[i] * elements[j]
};

// Table over an explicit element order; throws if the set is not closed.
CayleyTable make_cayley_table(std::vector<Element> elements, const Ambient& ambient);

// Table over enumerate(n, family) in canonical order.
CayleyTable cayley_table(Int n, const FamilyId& family);

bool is_commutative(const CayleyTable& table);

// CSV with a header row/column of canonical element strings (cells holding
// commas are quoted), and an aligned ASCII rendering.
std::string cayley_csv(const CayleyTable& table);
std::string cayley_ascii(const CayleyTable& table);

}  // namespace rookmn

#endif  // ROOKMN_ENUMERATE_HPP
