#include "rookmn/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace rookmn {

namespace {

// Narrow an Int128 count back to Int, loudly.
Int narrow(Int128 v) {
  if (v > Int128{INT64_MAX} || v < Int128{INT64_MIN}) {
    throw OverflowError("count does not fit in 64 bits");
  }
  return static_cast<Int>(v);
}

Int pyramidal(Int n) {  // 1^2 + 2^2 + ... + n^2
  return narrow(Int128{n} * (n + 1) * (2 * n + 1) / 6);
}

Int tetrahedral(Int n) {  // 1 + 3 + 6 + ... = n(n+1)(n+2)/6
  return narrow(Int128{n} * (n + 1) * (n + 2) / 6);
}

}  // namespace

std::string FamilyId::name() const {
  switch (tag) {
    case FamilyTag::mn: return "Mn";
    case FamilyTag::sn: return "Sn";
    case FamilyTag::ut: return "UT";
    case FamilyTag::sut: return "SUT";
    case FamilyTag::uf: return "UF";
    case FamilyTag::suf: return "SUF";
    case FamilyTag::lt: return "LT";
    case FamilyTag::slt: return "SLT";
    case FamilyTag::lf: return "LF";
    case FamilyTag::slf: return "SLF";
    case FamilyTag::diag: return "D";
    case FamilyTag::brandt: return "B";
    case FamilyTag::multiple_of_d0: return "MultipleOfD0(" + std::to_string(param) + ")";
    case FamilyTag::at_least_d0: return "AtLeastD0(" + std::to_string(param) + ")";
    case FamilyTag::zero_first_row_col: return "ZeroFirstRowCol";
    case FamilyTag::zero_first_row_last_col: return "ZeroFirstRowLastCol";
    case FamilyTag::at_most_j_ones: return "AtMostJOnes(" + std::to_string(param) + ")";
  }
  throw ValidationError("unknown family tag");
}

FamilyId FamilyId::parse(std::string_view text) {
  static const std::pair<std::string_view, FamilyTag> plain[] = {
      {"Mn", FamilyTag::mn},
      {"Sn", FamilyTag::sn},
      {"UT", FamilyTag::ut},
      {"SUT", FamilyTag::sut},
      {"UF", FamilyTag::uf},
      {"SUF", FamilyTag::suf},
      {"LT", FamilyTag::lt},
      {"SLT", FamilyTag::slt},
      {"LF", FamilyTag::lf},
      {"SLF", FamilyTag::slf},
      {"D", FamilyTag::diag},
      {"B", FamilyTag::brandt},
      {"ZeroFirstRowCol", FamilyTag::zero_first_row_col},
      {"ZeroFirstRowLastCol", FamilyTag::zero_first_row_last_col},
  };
  for (const auto& [name, tag] : plain) {
    if (text == name) return FamilyId{tag, 0};
  }

  static const std::pair<std::string_view, FamilyTag> with_param[] = {
      {"MultipleOfD0", FamilyTag::multiple_of_d0},
      {"AtLeastD0", FamilyTag::at_least_d0},
      {"AtMostJOnes", FamilyTag::at_most_j_ones},
  };
  for (const auto& [name, tag] : with_param) {
    if (text.size() > name.size() + 2 && text.substr(0, name.size()) == name &&
        text[name.size()] == '(' && text.back() == ')') {
      const std::string_view arg = text.substr(name.size() + 1, text.size() - name.size() - 2);
      Int value = 0;
      const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
      if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
        throw ValidationError("bad family parameter in '" + std::string(text) + "'");
      }
      return FamilyId{tag, value};
    }
  }

  throw ValidationError(
      "unknown family '" + std::string(text) +
      "'; expected one of Mn, Sn, UT, SUT, UF, SUF, LT, SLT, LF, SLF, D, B, "
      "MultipleOfD0(q), AtLeastD0(q), ZeroFirstRowCol, ZeroFirstRowLastCol, AtMostJOnes(q)");
}

void check_family(const FamilyId& family, Int n) {
  Ambient::finite(n);  // validates n >= 2
  switch (family.tag) {
    case FamilyTag::multiple_of_d0:
    case FamilyTag::at_least_d0:
      if (family.param < 1 || family.param > n - 1) {
        throw ValidationError(family.name() + " requires 1 <= d0 <= n-1 (n=" +
                              std::to_string(n) + ")");
      }
      break;
    case FamilyTag::at_most_j_ones:
      if (family.param < 2 || family.param > n) {
        throw ValidationError(family.name() + " requires 2 <= j <= n (n=" +
                              std::to_string(n) + ")");
      }
      break;
    default:
      break;
  }
}

bool family_contains(const FamilyId& family, const Element& x, Int n) {
  if (x.is_zero()) return true;  // zero is adjoined to every family
  const Triplet& t = x.triplet();
  switch (family.tag) {
    case FamilyTag::mn: return true;
    case FamilyTag::sn: return !(t.d == 0 && t.k == 1 && t.m == n);
    case FamilyTag::ut: return t.d >= 0;
    case FamilyTag::sut: return t.d > 0;
    case FamilyTag::uf: return t.d >= 0 && t.k == 1 && t.m == n - t.d;
    case FamilyTag::suf: return t.d > 0 && t.k == 1 && t.m == n - t.d;
    case FamilyTag::lt: return t.d <= 0;
    case FamilyTag::slt: return t.d < 0;
    case FamilyTag::lf: return t.d <= 0 && t.k == 1 - t.d && t.m == n;
    case FamilyTag::slf: return t.d < 0 && t.k == 1 - t.d && t.m == n;
    case FamilyTag::diag: return t.d == 0;
    case FamilyTag::brandt: return t.m == t.k;
    case FamilyTag::multiple_of_d0: return t.d % family.param == 0;
    case FamilyTag::at_least_d0: return t.d >= family.param;
    case FamilyTag::zero_first_row_col: return t.k >= 2 && t.k + t.d >= 2;
    case FamilyTag::zero_first_row_last_col: return t.k >= 2 && t.m + t.d <= n - 1;
    case FamilyTag::at_most_j_ones: return t.m - t.k + 1 <= family.param;
  }
  throw ValidationError("unknown family tag");
}

std::vector<Element> enumerate(Int n, const FamilyId& family) {
  check_family(family, n);
  std::vector<Element> out;
  out.push_back(Element::zero());
  // Canonical order: lexicographic by (d, k, m); the loop bounds make every
  // produced triplet valid, so membership is the only filter.
  for (Int d = -(n - 1); d <= n - 1; ++d) {
    const Int k_lo = 1 - std::min<Int>(0, d);
    const Int m_hi = n - std::max<Int>(0, d);
    for (Int k = k_lo; k <= m_hi; ++k) {
      for (Int m = k; m <= m_hi; ++m) {
        const Element x = Element::of(d, k, m);
        if (family_contains(family, x, n)) out.push_back(x);
      }
    }
  }
  return out;
}

std::optional<Int> order_formula(Int n, const FamilyId& family) {
  check_family(family, n);
  switch (family.tag) {
    case FamilyTag::mn: return pyramidal(n) + 1;
    case FamilyTag::sn: return pyramidal(n);
    case FamilyTag::ut:
    case FamilyTag::lt: return tetrahedral(n) + 1;
    case FamilyTag::sut:
    case FamilyTag::slt: return tetrahedral(n - 1) + 1;
    case FamilyTag::uf:
    case FamilyTag::lf: return n + 1;
    case FamilyTag::suf:
    case FamilyTag::slf: return n;
    case FamilyTag::diag: return n * (n + 1) / 2 + 1;
    default: return std::nullopt;
  }
}

// Both counts are taken within S_n and both include zero (which is at once
// idempotent and nilpotent), so they overlap by exactly one element:
// idempotents + nilpotents - 1 = |S_n|.
Int count_idempotents(Int n) {
  Ambient::finite(n);
  // {<0,k,m> : (k,m) != (1,n)} plus zero: n(n+1)/2 - 1 + 1.
  return n * (n + 1) / 2;
}

Int count_nilpotents(Int n) {
  Ambient::finite(n);
  // All d != 0 triplets plus zero: (n^3 - n)/3 + 1.
  return narrow((Int128{n} * n * n - n) / 3 + 1);
}

std::vector<Element> closure(const std::vector<Element>& generators, Int n) {
  const Ambient ambient = Ambient::finite(n);
  std::vector<Element> elems;
  std::unordered_set<Element, ElementHash> seen;
  for (const Element& g : generators) {
    if (!is_valid(g, ambient)) {
      throw ValidationError("generator " + to_string(g) + " is not valid for n=" +
                            std::to_string(n));
    }
    if (seen.insert(g).second) elems.push_back(g);
  }

  // Grow to a fixed point; each round multiplies every pair with at least
  // one factor appended since the previous round.
  std::size_t processed = 0;
  while (processed < elems.size()) {
    const std::size_t known = elems.size();
    for (std::size_t i = 0; i < known; ++i) {
      const std::size_t start = (i < processed) ? processed : 0;
      for (std::size_t j = start; j < known; ++j) {
        const Element p = multiply(elems[i], elems[j], ambient);
        if (seen.insert(p).second) elems.push_back(p);
      }
    }
    processed = known;
  }

  std::sort(elems.begin(), elems.end(), canonical_less);
  return elems;
}

std::vector<Element> generating_set_A(Int n) {
  Ambient::finite(n);
  std::vector<Element> out;
  for (Int k = 1; k <= n - 1; ++k) {
    for (Int m = k; m <= n - 1; ++m) out.push_back(Element::of(1, k, m));
  }
  return out;
}

PowerExpression express_as_power(const Element& x, Int n) {
  const Ambient ambient = Ambient::finite(n);
  if (x.is_zero()) return PowerExpression{Element::of(1, 1, 1), 2};
  if (!is_valid(x, ambient) || x.triplet().d < 1) {
    throw ValidationError(to_string(x) + " is not strictly upper triangular for n=" +
                          std::to_string(n));
  }
  const Triplet& t = x.triplet();
  const PowerExpression expr{Element::of(1, t.k, t.m + t.d - 1), t.d};
  if (power(expr.generator, expr.exponent, ambient) != x) {
    throw ValidationError("internal error: power expression for " + to_string(x) +
                          " failed to round-trip");
  }
  return expr;
}

bool verify_minimality(Int n) {
  const std::vector<Element> gens = generating_set_A(n);
  const std::vector<Element> full = enumerate(n, FamilyId{FamilyTag::sut});
  if (closure(gens, n) != full) return false;
  for (std::size_t drop = 0; drop < gens.size(); ++drop) {
    std::vector<Element> rest;
    rest.reserve(gens.size() - 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i != drop) rest.push_back(gens[i]);
    }
    if (closure(rest, n) == full) return false;  // gens[drop] was redundant
  }
  return true;
}

CayleyTable make_cayley_table(std::vector<Element> elements, const Ambient& ambient) {
  std::unordered_set<Element, ElementHash> members;
  for (const Element& x : elements) {
    if (!is_valid(x, ambient)) {
      throw ValidationError("table element " + to_string(x) + " is not valid");
    }
    if (!members.insert(x).second) {
      throw ValidationError("duplicate table element " + to_string(x));
    }
  }

  CayleyTable table;
  table.elements = std::move(elements);
  const std::size_t size = table.elements.size();
  table.products.assign(size, std::vector<Element>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const Element p = multiply(table.elements[i], table.elements[j], ambient);
      if (!members.contains(p)) {
        throw ValidationError("set is not closed: " + to_string(table.elements[i]) + " * " +
                              to_string(table.elements[j]) + " = " + to_string(p) +
                              " is outside it");
      }
      table.products[i][j] = p;
    }
  }
  return table;
}

CayleyTable cayley_table(Int n, const FamilyId& family) {
  return make_cayley_table(enumerate(n, family), Ambient::finite(n));
}

bool is_commutative(const CayleyTable& table) {
  const std::size_t size = table.elements.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (table.products[i][j] != table.products[j][i]) return false;
    }
  }
  return true;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return '"' + s + '"';
}

void append_rstripped(std::string& out, const std::string& line) {
  std::size_t end = line.size();
  while (end > 0 && line[end - 1] == ' ') --end;
  out.append(line, 0, end);
  out.push_back('\n');
}

}  // namespace

std::string cayley_csv(const CayleyTable& table) {
  std::string out = "*";
  for (const Element& x : table.elements) out += "," + csv_cell(to_string(x));
  out += '\n';
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    out += csv_cell(to_string(table.elements[i]));
    for (const Element& p : table.products[i]) out += "," + csv_cell(to_string(p));
    out += '\n';
  }
  return out;
}

std::string cayley_ascii(const CayleyTable& table) {
  std::size_t width = 1;
  std::vector<std::string> labels;
  labels.reserve(table.elements.size());
  for (const Element& x : table.elements) {
    labels.push_back(to_string(x));
    width = std::max(width, labels.back().size());
  }
  for (const auto& row : table.products) {
    for (const Element& p : row) width = std::max(width, to_string(p).size());
  }

  const auto pad = [width](const std::string& s) {
    return s + std::string(width - s.size(), ' ');
  };

  std::string out;
  std::string line = std::string(width, ' ') + " |";
  for (const std::string& label : labels) line += " " + pad(label);
  append_rstripped(out, line);

  line = std::string(width, '-') + "-+";
  line += std::string(labels.empty() ? 0 : labels.size() * (width + 1), '-');
  append_rstripped(out, line);

  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    line = pad(labels[i]) + " |";
    for (const Element& p : table.products[i]) line += " " + pad(to_string(p));
    append_rstripped(out, line);
  }
  return out;
}

}  // namespace rookmn
