#include "rookmn/element.hpp"

#include <cassert>
#include <cctype>
#include <ostream>

namespace rookmn {

Element make_element(Int d, Int k, Int m, const Ambient& ambient) {
  const auto show = [&] {
    return " (d=" + std::to_string(d) + ", k=" + std::to_string(k) + ", m=" + std::to_string(m) +
           (ambient.is_finite() ? ", n=" + std::to_string(ambient.n()) : std::string(", unbounded")) + ")";
  };
  if (k < 1 - std::min<Int>(0, d))
    throw ValidationError("k >= 1 - min(0,d) violated" + show());
  if (k > m)
    throw ValidationError("k <= m violated" + show());
  if (ambient.is_finite() && m > ambient.n() - std::max<Int>(0, d))
    throw ValidationError("m <= n - max(0,d) violated" + show());
  return Element::of(d, k, m);
}

Element power(const Element& x, Int j, const Ambient& ambient) {
  if (j < 1) throw ValidationError("power requires j >= 1, got j=" + std::to_string(j));
  if (x.is_zero()) return x;
  const Triplet& t = x.triplet();
  assert(triplet_valid(t, ambient));
  (void)ambient;
  // 128-bit intermediates: j is unrestricted, and k^(j), m^(j) can run away
  // long before the result collapses to zero.
  const Int128 kj = static_cast<Int128>(t.k) - static_cast<Int128>(j - 1) * std::min<Int>(0, t.d);
  const Int128 mj = static_cast<Int128>(t.m) - static_cast<Int128>(j - 1) * std::max<Int>(0, t.d);
  if (kj > mj) return Element::zero();
  // A nonzero result has components bounded by the input's, so they fit Int.
  return Element::of(checked_mul(j, t.d), static_cast<Int>(kj), static_cast<Int>(mj));
}

Classification classify(const Element& x, const Ambient& ambient) {
  if (x.is_zero()) return {ElementKind::zero_elem};
  const Triplet& t = x.triplet();
  assert(triplet_valid(t, ambient));
  if (t.d == 0) {
    if (ambient.is_finite() && t.k == 1 && t.m == ambient.n()) return {ElementKind::identity};
    return {ElementKind::idempotent};
  }
  const Int ones = t.m - t.k + 1;
  const Int ad = t.d < 0 ? -t.d : t.d;
  const Int index = 1 + (ones + ad - 1) / ad;  // 1 + ceil(ones / |d|)
  return {ElementKind::nilpotent, index};
}

std::optional<Element> root(const Element& x, Int j, const Ambient& ambient) {
  if (x.is_zero()) throw ValidationError("root of zero is not unique; enumerate instead");
  if (j < 1) throw ValidationError("root requires j >= 1, got j=" + std::to_string(j));
  const Triplet& t = x.triplet();
  assert(triplet_valid(t, ambient));
  if (t.d % j != 0) return std::nullopt;
  const Int dr = t.d / j;
  const Int kr = t.k + (j - 1) * std::min<Int>(0, dr);
  const Int mr = t.m + (j - 1) * std::max<Int>(0, dr);
  Element y = Element::of(dr, kr, mr);
  assert(is_valid(y, ambient));
  assert(power(y, j, ambient) == x);
  (void)ambient;
  return y;
}

bool commutes(const Element& x, const Element& y, const Ambient& ambient) {
  if (x.is_zero() || y.is_zero()) return true;
  const Triplet& a = x.triplet();
  const Triplet& b = y.triplet();
  assert(triplet_valid(a, ambient) && triplet_valid(b, ambient));
  (void)ambient;
  const Int kxy = std::max(a.k, b.k - a.d);
  const Int mxy = std::min(a.m, b.m - a.d);
  const Int kyx = std::max(b.k, a.k - b.d);
  const Int myx = std::min(b.m, a.m - b.d);
  // Case 1: equal nonzero products. Case 2: both products zero.
  if (kxy == kyx && mxy == myx && kxy <= mxy) return true;
  return kxy > mxy && kyx > myx;
}

Element verify_no_identity_witness(const Element& candidate) {
  if (candidate.is_zero()) return Element::of(0, 1, 1);
  const Triplet& t = candidate.triplet();
  if (t.d != 0) return Element::of(0, t.k, t.m);
  return Element::of(0, t.k, checked_add(t.m, 1));
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  const Triplet& t = x.triplet();
  return "<" + std::to_string(t.d) + "," + std::to_string(t.k) + "," + std::to_string(t.m) + ">";
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case ElementKind::zero_elem: return "zero";
    case ElementKind::identity: return "identity";
    case ElementKind::idempotent: return "idempotent";
    case ElementKind::nilpotent: return "nilpotent index=" + std::to_string(c.index);
  }
  return "?";
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void expect(char c) {
    if (done() || text[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  Int integer() {
    const std::size_t start = pos;
    if (!done() && text[pos] == '-') ++pos;
    const std::size_t digits = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError(start, "expected an integer");
    Int value = 0;
    for (std::size_t i = digits; i < pos; ++i) {
      value = checked_mul(value, 10);
      value = checked_add(value, text[i] - '0');
    }
    return text[start] == '-' ? -value : value;
  }
};

}  // namespace

Element parse_element(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError(c.pos, "empty element");
  Element result;
  if (c.peek() == '0') {
    ++c.pos;
    result = Element::zero();
  } else if (c.peek() == '<') {
    ++c.pos;
    c.skip_ws();
    const Int d = c.integer();
    c.skip_ws();
    c.expect(',');
    c.skip_ws();
    const Int k = c.integer();
    c.skip_ws();
    c.expect(',');
    c.skip_ws();
    const Int m = c.integer();
    c.skip_ws();
    c.expect('>');
    // Membership in the ambient is the caller's concern; the universal
    // (unbounded) constraints always apply.
    result = make_element(d, k, m, Ambient::unbounded());
  } else {
    throw ParseError(c.pos, "expected '0' or '<d,k,m>'");
  }
  c.skip_ws();
  if (!c.done()) throw ParseError(c.pos, "trailing characters after element");
  return result;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

}  // namespace rookmn
