#pragma once

// Dense linear algebra over GF(2).
//
// Bit convention shared by the whole library: message x_k lives at bit
// index k-1. A vector's integer value is sum(bit_k * 2^k), which is the
// order used when codewords or subspace elements need to be sorted.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icopt {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector from_mask(std::size_t length, std::uint64_t mask);
  /// Parses '0'/'1' characters; character i becomes bit i.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t length, std::size_t index);

  [[nodiscard]] std::size_t size() const { return length_; }
  [[nodiscard]] bool get(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= bit;
    } else {
      words_[i / 64] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t popcount() const;
  /// Lowest set bit, or size() when the vector is zero.
  [[nodiscard]] std::size_t first_set() const;
  /// Only valid for size() <= 64.
  [[nodiscard]] std::uint64_t to_mask() const;
  [[nodiscard]] bool dot(const BitVector& other) const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Orders by length, then by integer value.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  /// rows may be zero; cols must be positive.
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::vector<BitVector> rows);
  static BitMatrix from_strings(std::span<const std::string_view> rows);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

  [[nodiscard]] std::size_t rows() const { return data_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

  [[nodiscard]] const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }
  [[nodiscard]] BitVector column(std::size_t c) const;
  [[nodiscard]] const std::vector<BitVector>& row_vectors() const { return data_; }

  [[nodiscard]] BitMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::vector<std::string> to_strings() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

struct RowEchelon {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;
};

[[nodiscard]] RowEchelon rref(const BitMatrix& m);
[[nodiscard]] std::size_t rank(const BitMatrix& m);
[[nodiscard]] std::size_t span_dimension(std::span<const BitVector> vectors);

/// Rank of a matrix whose rows are packed into 64-bit masks.
[[nodiscard]] std::size_t rank_of_masks(std::span<const std::uint64_t> rows);

/// All x with a*x = b and x[k] = 0 for the forced indices:
/// particular + span(directions).
class AffineSolutionSet {
 public:
  AffineSolutionSet(BitVector particular, std::vector<BitVector> directions)
      : particular_(std::move(particular)), directions_(std::move(directions)) {}

  [[nodiscard]] const BitVector& particular() const { return particular_; }
  [[nodiscard]] const std::vector<BitVector>& directions() const { return directions_; }
  [[nodiscard]] std::size_t dimension() const { return directions_.size(); }
  /// Member selected by the low dimension() bits of index.
  [[nodiscard]] BitVector member(std::uint64_t index) const;

 private:
  BitVector particular_;
  std::vector<BitVector> directions_;
};

/// Returns std::nullopt when the constrained system is inconsistent.
[[nodiscard]] std::optional<AffineSolutionSet> solve_affine(
    const BitMatrix& a, const BitVector& b, std::span<const std::size_t> forced_zero = {});

/// A subspace of GF(2)^n held by its reduced row-echelon basis, so that
/// equal spans compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace span_of(std::size_t ambient_dim, std::span<const BitVector> vectors);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<BitVector>& basis() const { return basis_; }
  [[nodiscard]] bool contains(const BitVector& v) const;
  /// Every element of the span, ascending by integer value. Includes zero.
  [[nodiscard]] std::vector<BitVector> elements() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<BitVector> basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept;
};

/// Streams every unordered basis of a subspace exactly once. Each basis is
/// emitted with its vectors in ascending integer order.
class BasisEnumerator {
 public:
  explicit BasisEnumerator(const Subspace& space);
  bool next(std::vector<BitVector>& basis);

 private:
  bool seek(std::size_t depth, std::size_t from);

  std::size_t dim_;
  std::vector<BitVector> elements_;   // nonzero elements, ascending
  std::vector<std::uint64_t> coords_; // coordinates w.r.t. the rref basis
  std::vector<std::size_t> chosen_;
  // reducers_[d] is an xor basis (indexed by leading bit) of the first d choices
  std::vector<std::vector<std::uint64_t>> reducers_;
  bool started_ = false;
  bool done_ = false;
};

/// Streams every dim-dimensional subspace of GF(2)^ambient_dim exactly once,
/// walking pivot patterns in lexicographic order and free entries in binary.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(std::size_t ambient_dim, std::size_t dim);
  bool next(Subspace& out);

 private:
  bool next_pivots();
  void reset_free_entries();

  std::size_t n_;
  std::size_t c_;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, col)
  std::uint64_t assignment_ = 0;
  bool done_ = false;
};

}  // namespace icopt
