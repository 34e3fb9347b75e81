#ifndef ROOKMN_ELEMENT_HPP
#define ROOKMN_ELEMENT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rookmn/ints.hpp"

namespace rookmn {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed element/matrix text; `position` is a 0-based offset into the input.
struct ParseError : ValidationError {
  ParseError(std::size_t position, const std::string& what)
      : ValidationError("at position " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

// Dimension context: the monoid of n x n matrices for finite n, or the
// countably infinite semigroup when unbounded.
class Ambient {
 public:
  static Ambient unbounded() { return Ambient{0}; }
  static Ambient finite(Int n) {
    if (n < 2) throw ValidationError("finite ambient requires n >= 2, got n=" + std::to_string(n));
    return Ambient{n};
  }

  bool is_finite() const { return n_ != 0; }
  Int n() const { return n_; }  // 0 when unbounded

  friend bool operator==(const Ambient&, const Ambient&) = default;

 private:
  explicit Ambient(Int n) : n_(n) {}
  Int n_;
};

// A nonzero element: ones on diagonal offset d (main = 0, positive = above),
// occupying rows k through m as an uninterrupted block.
struct Triplet {
  Int d;
  Int k;
  Int m;

  friend bool operator==(const Triplet&, const Triplet&) = default;
  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

// Zero or a triplet. Immutable value type; the default-constructed Element is zero.
class Element {
 public:
  constexpr Element() = default;
  static Element zero() { return Element{}; }
  // Trusted constructor: no validation. Use make_element for checked construction.
  static Element of(Triplet t) {
    Element e;
    e.t_ = t;
    return e;
  }
  static Element of(Int d, Int k, Int m) { return of(Triplet{d, k, m}); }

  bool is_zero() const { return !t_.has_value(); }
  const Triplet& triplet() const { return *t_; }  // pre: !is_zero()

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::optional<Triplet> t_;
};

// Canonical order: zero first, then lexicographic by (d, k, m).
inline bool canonical_less(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() < !b.is_zero();
  return a.triplet() < b.triplet();
}

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    if (e.is_zero()) return 0x9e3779b97f4a7c15ULL;
    const Triplet& t = e.triplet();
    std::size_t h = std::hash<Int>{}(t.d);
    h = h * 0x100000001b3ULL ^ std::hash<Int>{}(t.k);
    h = h * 0x100000001b3ULL ^ std::hash<Int>{}(t.m);
    return h;
  }
};

enum class ElementKind { zero_elem, identity, idempotent, nilpotent };

struct Classification {
  ElementKind kind;
  Int index = 0;  // nilpotency index; meaningful only when kind == nilpotent

  friend bool operator==(const Classification&, const Classification&) = default;
};

// --- validity -------------------------------------------------------------

inline bool triplet_valid(const Triplet& t, const Ambient& ambient) {
  if (t.k < 1 - std::min<Int>(0, t.d) || t.k > t.m) return false;
  if (ambient.is_finite() && t.m > ambient.n() - std::max<Int>(0, t.d)) return false;
  return true;
}

inline bool is_valid(const Element& x, const Ambient& ambient) {
  return x.is_zero() || triplet_valid(x.triplet(), ambient);
}

// Checked construction; throws ValidationError naming the violated inequality.
Element make_element(Int d, Int k, Int m, const Ambient& ambient);

// --- the triplet calculus ---------------------------------------------------
// All operations below assume their Element arguments are valid in the given
// ambient (constructors are the sole validation point).

// Product of two nonzero triplets: d'' = d + d', k'' = max(k, k' - d),
// m'' = min(m, m' - d); zero when k'' > m''.
inline Element multiply(const Element& x, const Element& y, const Ambient& /*ambient*/ = Ambient::unbounded()) {
  if (x.is_zero() || y.is_zero()) return Element::zero();
  const Triplet& a = x.triplet();
  const Triplet& b = y.triplet();
  const Int k2 = std::max(a.k, b.k - a.d);
  const Int m2 = std::min(a.m, b.m - a.d);
  if (k2 > m2) return Element::zero();
  return Element::of(a.d + b.d, k2, m2);
}

// O(1) nonzero-product test: xy != 0 iff k' - m <= d <= m' - k (both factors
// nonzero). Agrees with multiply(x, y) != zero by construction of the bounds.
inline bool nonzero_product(const Triplet& a, const Triplet& b) {
  return b.k - a.m <= a.d && a.d <= b.m - a.k;
}

inline bool is_nonzero_product(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return false;
  return nonzero_product(x.triplet(), y.triplet());
}

// x^j in closed form: d^(j) = jd, k^(j) = k - (j-1)min(0,d),
// m^(j) = m - (j-1)max(0,d); zero when k^(j) > m^(j).
Element power(const Element& x, Int j, const Ambient& ambient = Ambient::unbounded());

Classification classify(const Element& x, const Ambient& ambient);

inline Int ones_count(const Element& x) {
  return x.is_zero() ? 0 : x.triplet().m - x.triplet().k + 1;
}

// The unique j-th root when it exists (iff j divides d); nullopt otherwise.
// pre: x != zero (zero has multiple roots, found by enumeration instead).
std::optional<Element> root(const Element& x, Int j, const Ambient& ambient = Ambient::unbounded());

inline Element transpose(const Element& x) {
  if (x.is_zero()) return x;
  const Triplet& t = x.triplet();
  return Element::of(-t.d, t.k + t.d, t.m + t.d);
}

// xy == yx, decided from the triplet parameters without forming products.
bool commutes(const Element& x, const Element& y, const Ambient& ambient = Ambient::unbounded());

// For a candidate identity of the unbounded semigroup, returns a witness w
// with candidate * w != w. Candidates <0,k,m> get <0,k,m+1>; candidates with
// d != 0 cannot fix any element (products shift the diagonal), so their own
// d = 0 shadow <0,k,m> already witnesses the failure.
Element verify_no_identity_witness(const Element& candidate);

// --- text form --------------------------------------------------------------
// Canonical form: "0" for zero, "<d,k,m>" otherwise. Round-trips exactly.

std::string to_string(const Element& x);
std::string to_string(const Classification& c);

// Throws ParseError (with offset) on malformed input. The whole string must
// be consumed apart from surrounding whitespace.
Element parse_element(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace rookmn

#endif  // ROOKMN_ELEMENT_HPP
