#ifndef ROOKMN_MATRIX_HPP
#define ROOKMN_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rookmn/element.hpp"

namespace rookmn {

// Dense n x n 0/1 matrix with at most one 1 per row and per column (the rook
// condition, enforced at construction). Used as the brute-force oracle for
// differential tests against the triplet calculus; deliberately naive, with
// no shortcuts shared with the triplet code path.
//
// Rows and columns are 1-based, matching the usual matrix-entry convention
// x_ij. Dimensions up to 64 are supported (one bit-set word per row); the
// oracle never needs more.
class DenseRookMatrix {
 public:
  // Zero matrix.
  explicit DenseRookMatrix(Int n);
  // Matrix with ones at the given (row, column) positions; throws
  // ValidationError if any index is out of range or the rook condition fails.
  DenseRookMatrix(Int n, const std::vector<std::pair<Int, Int>>& ones);

  // Text form: n lines of n characters from {0,1}.
  static DenseRookMatrix parse(std::string_view text);
  std::string to_text() const;

  Int dim() const { return n_; }
  bool get(Int i, Int j) const { return (rows_[i - 1] >> (j - 1)) & 1; }
  bool is_zero() const;
  std::vector<std::pair<Int, Int>> ones() const;

  DenseRookMatrix transposed() const;

  friend bool operator==(const DenseRookMatrix&, const DenseRookMatrix&) = default;

 private:
  Int n_;
  std::vector<std::uint64_t> rows_;
};

// Entries x_ij = 1 iff k <= i <= m and j = i + d, clipped to the n x n window.
// pre: x valid under Finite(n).
DenseRookMatrix to_matrix(const Element& x, Int n);

// Inverse of to_matrix on its image; nullopt when the ones span multiple
// diagonals or the block of occupied rows is interrupted.
std::optional<Element> from_matrix(const DenseRookMatrix& M);

// Ordinary integer matrix product (naive O(n^3)). Throws on dimension mismatch.
DenseRookMatrix mat_multiply(const DenseRookMatrix& A, const DenseRookMatrix& B);

// Least l >= 1 with M^l = 0, searched up to l = n (any nilpotent n x n matrix
// has index <= n); nullopt if M^n != 0.
std::optional<Int> mat_nilpotency_index(const DenseRookMatrix& M);

}  // namespace rookmn

#endif  // ROOKMN_MATRIX_HPP
