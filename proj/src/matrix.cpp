#include "rookmn/matrix.hpp"

#include <algorithm>

namespace rookmn {

namespace {

void check_dim(Int n) {
  if (n < 1 || n > 64)
    throw ValidationError("matrix dimension must be in [1, 64], got n=" + std::to_string(n));
}

}  // namespace

DenseRookMatrix::DenseRookMatrix(Int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  check_dim(n);
}

DenseRookMatrix::DenseRookMatrix(Int n, const std::vector<std::pair<Int, Int>>& ones)
    : DenseRookMatrix(n) {
  std::uint64_t used_cols = 0;
  for (const auto& [i, j] : ones) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw ValidationError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(n) + "x" + std::to_string(n));
    if (rows_[i - 1] != 0)
      throw ValidationError("rook condition violated: two ones in row " + std::to_string(i));
    if ((used_cols >> (j - 1)) & 1)
      throw ValidationError("rook condition violated: two ones in column " + std::to_string(j));
    rows_[i - 1] = 1ULL << (j - 1);
    used_cols |= 1ULL << (j - 1);
  }
}

DenseRookMatrix DenseRookMatrix::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(0, "empty matrix");
  const Int n = static_cast<Int>(lines.size());
  check_dim(n);
  std::vector<std::pair<Int, Int>> ones;
  for (Int i = 1; i <= n; ++i) {
    const std::string_view line = lines[i - 1];
    if (static_cast<Int>(line.size()) != n)
      throw ParseError(0, "row " + std::to_string(i) + " has " + std::to_string(line.size()) +
                              " entries, expected " + std::to_string(n));
    for (Int j = 1; j <= n; ++j) {
      const char c = line[j - 1];
      if (c == '1')
        ones.emplace_back(i, j);
      else if (c != '0')
        throw ParseError(0, std::string("bad matrix character '") + c + "' in row " + std::to_string(i));
    }
  }
  return {n, ones};
}

std::string DenseRookMatrix::to_text() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_ * (n_ + 1)));
  for (Int i = 1; i <= n_; ++i) {
    for (Int j = 1; j <= n_; ++j) out.push_back(get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

bool DenseRookMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](std::uint64_t r) { return r == 0; });
}

std::vector<std::pair<Int, Int>> DenseRookMatrix::ones() const {
  std::vector<std::pair<Int, Int>> out;
  for (Int i = 1; i <= n_; ++i)
    for (Int j = 1; j <= n_; ++j)
      if (get(i, j)) out.emplace_back(i, j);
  return out;
}

DenseRookMatrix DenseRookMatrix::transposed() const {
  std::vector<std::pair<Int, Int>> flipped;
  for (const auto& [i, j] : ones()) flipped.emplace_back(j, i);
  return {n_, flipped};
}

DenseRookMatrix to_matrix(const Element& x, Int n) {
  if (!is_valid(x, Ambient::finite(n)))
    throw ValidationError("element " + to_string(x) + " is not valid in M_" + std::to_string(n));
  if (x.is_zero()) return DenseRookMatrix(n);
  const Triplet& t = x.triplet();
  std::vector<std::pair<Int, Int>> ones;
  for (Int i = t.k; i <= t.m; ++i) ones.emplace_back(i, i + t.d);
  return {n, ones};
}

std::optional<Element> from_matrix(const DenseRookMatrix& M) {
  const auto ones = M.ones();
  if (ones.empty()) return Element::zero();
  const Int d = ones.front().second - ones.front().first;
  Int prev_row = ones.front().first;
  for (std::size_t idx = 1; idx < ones.size(); ++idx) {
    const auto& [i, j] = ones[idx];
    if (j - i != d) return std::nullopt;  // ones on multiple diagonals
    if (i != prev_row + 1) return std::nullopt;  // interrupted block
    prev_row = i;
  }
  Element x = Element::of(d, ones.front().first, ones.back().first);
  if (!is_valid(x, Ambient::finite(std::max<Int>(2, M.dim())))) return std::nullopt;
  return x;
}

DenseRookMatrix mat_multiply(const DenseRookMatrix& A, const DenseRookMatrix& B) {
  if (A.dim() != B.dim())
    throw ValidationError("matrix dimension mismatch: " + std::to_string(A.dim()) + " vs " +
                          std::to_string(B.dim()));
  const Int n = A.dim();
  std::vector<std::pair<Int, Int>> ones;
  for (Int i = 1; i <= n; ++i) {
    for (Int j = 1; j <= n; ++j) {
      Int sum = 0;
      for (Int l = 1; l <= n; ++l) sum += static_cast<Int>(A.get(i, l) && B.get(l, j));
      if (sum != 0) ones.emplace_back(i, j);
    }
  }
  return {n, ones};
}

std::optional<Int> mat_nilpotency_index(const DenseRookMatrix& M) {
  DenseRookMatrix p = M;
  for (Int l = 1; l <= M.dim(); ++l) {
    if (l > 1) p = mat_multiply(p, M);
    if (p.is_zero()) return l;
  }
  return std::nullopt;
}

}  // namespace rookmn
