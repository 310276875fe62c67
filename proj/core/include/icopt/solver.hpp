#pragma once

// Optimal-length linear index codes over GF(2).
//
// Main path: the optimal length is the minimum rank over all fitting
// matrices, and the optimal codes are exactly the bases of the distinct
// column spaces attaining that rank.
//
// Verification path: the right inverses T of A^T that respect the B_SI zero
// pattern (the set S'(c)) are enumerated column by column. A candidate
// factors as T^T = B F exactly when, for every broadcast slot i, the T_B
// columns {i, c+i, ..., (n-1)c+i} span at most one dimension. A length is
// optimal iff every such factorable candidate uses all of its slots.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icopt/gf2.hpp"
#include "icopt/netcode.hpp"
#include "icopt/problem.hpp"

namespace icopt {

/// An exponential enumeration would exceed its configured size (CLI exit 2).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits, in bits, on the exponential enumerations.
struct Budget {
  static constexpr unsigned kDefaultBits = 24;

  unsigned fitting_bits = kDefaultBits;  // sum |K_i|
  unsigned s_prime_bits = kDefaultBits;  // n^2 c - n^2 + sum |K_i|
  unsigned listing_bits = kDefaultBits;  // log2 of codes materialized in a report

  /// Defaults, overridden by ICOPT_BUDGET_BITS when set.
  static Budget from_env();
  static Budget uniform(unsigned bits) { return Budget{bits, bits, bits}; }
};

/// n x n matrix with unit diagonal; entry (i, j) off the diagonal may be set
/// only when x_i is in K_j. Column j is then a vector R_j can decode from.
class FittingMatrix {
 public:
  /// Throws std::invalid_argument when m does not fit p.
  FittingMatrix(const IndexCodingProblem& p, BitMatrix m);

  /// Assignment bit s sets the entry of side-information edge s
  /// (side_info_entries order).
  static FittingMatrix from_assignment(const IndexCodingProblem& p, std::uint64_t assignment);

  [[nodiscard]] const BitMatrix& matrix() const { return m_; }
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] Subspace column_space() const;

  friend bool operator==(const FittingMatrix&, const FittingMatrix&) = default;

 private:
  BitMatrix m_;
};

[[nodiscard]] std::uint64_t fitting_matrix_count(const IndexCodingProblem& p, const Budget& budget);

/// Streams fitting matrices for assignments in [begin, end). Disjoint ranges
/// may be consumed by separate workers.
class FittingMatrixEnumerator {
 public:
  FittingMatrixEnumerator(const IndexCodingProblem& p, const Budget& budget);
  FittingMatrixEnumerator(const IndexCodingProblem& p, const Budget& budget, std::uint64_t begin,
                          std::uint64_t end);
  bool next(FittingMatrix& out);

 private:
  const IndexCodingProblem* p_;
  std::uint64_t cursor_;
  std::uint64_t end_;
};

[[nodiscard]] std::size_t optimal_length(const IndexCodingProblem& p, const Budget& budget = {});

struct OptimalSpaces {
  std::size_t length = 0;
  std::vector<Subspace> spaces;  // distinct, ascending

  [[nodiscard]] std::size_t mu() const { return spaces.size(); }
};

[[nodiscard]] OptimalSpaces optimal_column_spaces(const IndexCodingProblem& p, const Budget& budget = {});

/// Unordered set of linearly independent codewords, kept sorted ascending.
class IndexCode {
 public:
  IndexCode() = default;
  /// Throws std::invalid_argument on an empty, ragged or dependent set.
  explicit IndexCode(std::vector<BitVector> codewords);

  [[nodiscard]] std::size_t length() const { return codewords_.size(); }
  [[nodiscard]] std::size_t n() const { return codewords_.front().size(); }
  [[nodiscard]] const std::vector<BitVector>& codewords() const { return codewords_; }
  /// Codewords as "x1+x2" strings.
  [[nodiscard]] std::vector<std::string> render() const;

  friend bool operator==(const IndexCode&, const IndexCode&) = default;
  friend auto operator<=>(const IndexCode&, const IndexCode&) = default;

 private:
  std::vector<BitVector> codewords_;
};

/// "x1+x3" for the codeword with bits 0 and 2 set. The zero word renders "0".
[[nodiscard]] std::string render_codeword(const BitVector& word);
/// Inverse of render_codeword; throws std::invalid_argument.
[[nodiscard]] BitVector parse_codeword(std::size_t n, std::string_view text);

/// Streams every optimal-length code: all bases of every optimal column space.
class OptimalCodeEnumerator {
 public:
  explicit OptimalCodeEnumerator(const IndexCodingProblem& p, const Budget& budget = {});
  bool next(IndexCode& out);

  [[nodiscard]] const OptimalSpaces& spaces() const { return spaces_; }

 private:
  OptimalSpaces spaces_;
  std::size_t space_index_ = 0;
  std::optional<BasisEnumerator> bases_;
  std::vector<BitVector> scratch_;
};

/// All optimal codes in canonical (lexicographic) order.
[[nodiscard]] std::vector<IndexCode> optimal_codes(const IndexCodingProblem& p, const Budget& budget = {});

/// Number of unordered bases of a c-dimensional space over GF(2):
/// prod_{i<c} (2^c - 2^i) / c!. Throws std::overflow_error past 64 bits.
[[nodiscard]] std::uint64_t theorem2_lower_bound(std::size_t c);

/// A right inverse of A^T, (nc + sum|K_i|) x n, respecting the B_SI zero
/// pattern.
struct CandidateT {
  BitMatrix t;
  std::size_t c = 0;

  friend bool operator==(const CandidateT&, const CandidateT&) = default;
};

/// log2 |S'(c)| = n^2 c - n^2 + sum |K_i|.
[[nodiscard]] std::size_t s_prime_exponent(const IndexCodingProblem& p, std::size_t c);

/// True iff A^T t = I and every side-information row of t is zero outside
/// its own receiver's column.
[[nodiscard]] bool is_s_prime_member(const IndexCodingProblem& p, std::size_t c, const BitMatrix& t);

/// Streams S'(c) in Gray-code order; each step flips one affine direction of
/// one column. The returned pointer is valid until the next call.
class SPrimeEnumerator {
 public:
  SPrimeEnumerator(const IndexCodingProblem& p, std::size_t c, const Budget& budget = {});
  const CandidateT* next();

  [[nodiscard]] std::uint64_t size() const { return std::uint64_t{1} << directions_.size(); }

 private:
  struct Direction {
    std::size_t column;
    BitVector rows;
  };

  CandidateT current_;
  std::vector<Direction> directions_;
  std::uint64_t step_ = 0;
};

/// Every slot group of T_B spans at most one dimension.
[[nodiscard]] bool lemma1_membership(const BitMatrix& t, std::size_t n, std::size_t c);
[[nodiscard]] inline bool lemma1_membership(const CandidateT& t, std::size_t n) {
  return lemma1_membership(t.t, n, t.c);
}

/// Number of slot groups of T_B that are entirely zero.
[[nodiscard]] std::size_t lambda_of(const BitMatrix& t, std::size_t n, std::size_t c);
[[nodiscard]] inline std::size_t lambda_of(const CandidateT& t, std::size_t n) { return lambda_of(t.t, n, t.c); }

/// (2^{n+1} - 1)^lambda: the (B, F) pairs whose product is t^T.
[[nodiscard]] std::uint64_t count_bf_pairs(std::size_t n, std::size_t lambda);
[[nodiscard]] std::uint64_t count_bf_pairs(const CandidateT& t, std::size_t n);

/// Canonical (beta, eps, sigma) with B F = t^T: a nonzero group with
/// direction v gets eps = v and beta(x_k) = 1 iff column k of the group is v;
/// zero groups get zero beta and eps. sigma is read off t's side-information
/// rows. Throws std::invalid_argument when t fails lemma1_membership.
[[nodiscard]] TransferDecomposition recover_decomposition(const CandidateT& t, const IndexCodingProblem& p);

enum class Verdict { kOptimal, kFeasibleSuboptimal, kInfeasible };
[[nodiscard]] std::string_view to_string(Verdict v);

struct Theorem1Result {
  std::size_t length = 0;
  Verdict verdict = Verdict::kInfeasible;
  std::uint64_t s_prime_size = 0;
  std::uint64_t s_size = 0;
  std::vector<std::uint64_t> lambda_histogram;  // index = lambda, 0..c
  std::optional<CandidateT> positive_lambda_example;
  std::vector<CandidateT> candidates;  // all of S'(c) when requested
};

/// Classifies length c by scanning S'(c). Every Lemma 1 member is also
/// checked to realize M = I through its recovered decomposition; a mismatch
/// throws std::logic_error.
[[nodiscard]] Theorem1Result theorem1_verify(const IndexCodingProblem& p, std::size_t c, const Budget& budget = {},
                                             bool keep_candidates = false);

/// For single-uniprior problems: mu == 1 and the code count meets the lower
/// bound. For other problems: whether the count happens to meet the bound.
[[nodiscard]] bool corollary2_check(const IndexCodingProblem& p, const Budget& budget = {});

struct OptimalityReport {
  std::size_t optimal_length = 0;
  std::size_t mu = 0;
  std::uint64_t lower_bound = 0;
  std::uint64_t code_count = 0;
  std::vector<IndexCode> codes;  // canonical order
};

/// Throws BudgetExceeded if the code list would exceed budget.listing_bits.
[[nodiscard]] OptimalityReport full_report(const IndexCodingProblem& p, const Budget& budget = {});

}  // namespace icopt
