#include "icopt/solver.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <future>
#include <set>
#include <thread>

namespace icopt {

namespace {

__extension__ typedef unsigned __int128 u128;

std::string budget_message(std::string_view what, std::size_t needed_bits, unsigned budget_bits) {
  return std::string(what) + " needs 2^" + std::to_string(needed_bits) + " items but the budget is 2^" +
         std::to_string(budget_bits) + " (raise ICOPT_BUDGET_BITS to allow it)";
}

void require_fitting_budget(const IndexCodingProblem& p, const Budget& budget) {
  const auto bits = side_info_total(p);
  if (bits > budget.fitting_bits || bits > 62) {
    throw BudgetExceeded(budget_message("fitting-matrix enumeration", bits, budget.fitting_bits));
  }
}

// Column j of the fitting matrix for an assignment: e_j plus the known
// messages of receiver j whose assignment bit is set.
struct FittingLayout {
  std::size_t n;
  std::vector<std::size_t> column;  // per side-info edge
  std::vector<std::uint64_t> bit;   // per side-info edge

  explicit FittingLayout(const IndexCodingProblem& p) : n(p.n()) {
    for (const auto& e : side_info_entries(p)) {
      column.push_back(e.receiver - 1);
      bit.push_back(std::uint64_t{1} << (e.message - 1));
    }
  }

  void columns(std::uint64_t assignment, std::vector<std::uint64_t>& out) const {
    out.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = std::uint64_t{1} << j;
    }
    for (std::size_t s = 0; s < column.size(); ++s) {
      if ((assignment >> s) & 1U) {
        out[column[s]] |= bit[s];
      }
    }
  }
};

// Fully reduced echelon basis with pivots at the lowest set bit, ordered by
// pivot. Unique per span.
std::vector<std::uint64_t> canonical_basis(const std::vector<std::uint64_t>& vectors) {
  std::vector<std::uint64_t> basis;
  for (auto x : vectors) {
    for (const auto b : basis) {
      if (x & (b & -b)) {
        x ^= b;
      }
    }
    if (x == 0) {
      continue;
    }
    const std::uint64_t pivot = x & -x;
    for (auto& b : basis) {
      if (b & pivot) {
        b ^= x;
      }
    }
    basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end(), [](std::uint64_t a, std::uint64_t b) { return (a & -a) < (b & -b); });
  return basis;
}

struct FittingScan {
  std::size_t min_rank = SIZE_MAX;
  std::set<std::vector<std::uint64_t>> spaces;
};

FittingScan scan_fitting_range(const FittingLayout& layout, std::uint64_t begin, std::uint64_t end,
                               bool collect_spaces) {
  FittingScan scan;
  std::vector<std::uint64_t> cols;
  for (std::uint64_t a = begin; a < end; ++a) {
    layout.columns(a, cols);
    const auto r = rank_of_masks(cols);
    if (r > scan.min_rank) {
      continue;
    }
    if (r < scan.min_rank) {
      scan.min_rank = r;
      scan.spaces.clear();
    }
    if (collect_spaces) {
      scan.spaces.insert(canonical_basis(cols));
    }
  }
  return scan;
}

FittingScan scan_all_fitting(const IndexCodingProblem& p, const Budget& budget, bool collect_spaces) {
  require_fitting_budget(p, budget);
  const FittingLayout layout(p);
  const std::uint64_t total = std::uint64_t{1} << side_info_total(p);
  const std::uint64_t workers = std::max(1U, std::thread::hardware_concurrency());
  if (total < (std::uint64_t{1} << 14) || workers == 1) {
    return scan_fitting_range(layout, 0, total, collect_spaces);
  }
  // Contiguous index ranges per worker; the merge is order independent.
  std::vector<std::future<FittingScan>> parts;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t begin = 0; begin < total; begin += chunk) {
    const std::uint64_t end = std::min(total, begin + chunk);
    parts.push_back(std::async(std::launch::async, scan_fitting_range, std::cref(layout), begin, end, collect_spaces));
  }
  FittingScan merged;
  for (auto& f : parts) {
    auto part = f.get();
    if (part.min_rank < merged.min_rank) {
      merged = std::move(part);
    } else if (part.min_rank == merged.min_rank) {
      merged.spaces.merge(part.spaces);
    }
  }
  return merged;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* raw = std::getenv("ICOPT_BUDGET_BITS"); raw != nullptr && *raw != '\0') {
    const std::string_view text(raw);
    unsigned bits = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), bits);
    if (ec != std::errc() || ptr != text.data() + text.size() || bits < 1 || bits > 62) {
      throw InputError("ICOPT_BUDGET_BITS must be an integer between 1 and 62");
    }
    b = uniform(bits);
  }
  return b;
}

FittingMatrix::FittingMatrix(const IndexCodingProblem& p, BitMatrix m) : m_(std::move(m)) {
  const std::size_t n = p.n();
  if (m_.rows() != n || m_.cols() != n) {
    throw std::invalid_argument("fitting matrix must be n x n");
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto allowed = p.known_mask(j + 1) | (std::uint64_t{1} << j);
    for (std::size_t i = 0; i < n; ++i) {
      const bool bit = m_.get(i, j);
      if (i == j && !bit) {
        throw std::invalid_argument("fitting matrix needs a unit diagonal");
      }
      if (bit && ((allowed >> i) & 1U) == 0) {
        throw std::invalid_argument("fitting matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") is not a side-information position");
      }
    }
  }
}

FittingMatrix FittingMatrix::from_assignment(const IndexCodingProblem& p, std::uint64_t assignment) {
  BitMatrix m = BitMatrix::identity(p.n());
  const auto entries = side_info_entries(p);
  for (std::size_t s = 0; s < entries.size(); ++s) {
    if ((assignment >> s) & 1U) {
      m.set(entries[s].message - 1, entries[s].receiver - 1);
    }
  }
  return FittingMatrix(p, std::move(m));
}

std::size_t FittingMatrix::rank() const { return icopt::rank(m_); }

Subspace FittingMatrix::column_space() const {
  const auto t = m_.transpose();
  return Subspace::span_of(m_.rows(), t.row_vectors());
}

std::uint64_t fitting_matrix_count(const IndexCodingProblem& p, const Budget& budget) {
  require_fitting_budget(p, budget);
  return std::uint64_t{1} << side_info_total(p);
}

FittingMatrixEnumerator::FittingMatrixEnumerator(const IndexCodingProblem& p, const Budget& budget)
    : FittingMatrixEnumerator(p, budget, 0, fitting_matrix_count(p, budget)) {}

FittingMatrixEnumerator::FittingMatrixEnumerator(const IndexCodingProblem& p, const Budget& budget,
                                                 std::uint64_t begin, std::uint64_t end)
    : p_(&p), cursor_(begin), end_(std::min(end, fitting_matrix_count(p, budget))) {}

bool FittingMatrixEnumerator::next(FittingMatrix& out) {
  if (cursor_ >= end_) {
    return false;
  }
  out = FittingMatrix::from_assignment(*p_, cursor_++);
  return true;
}

std::size_t optimal_length(const IndexCodingProblem& p, const Budget& budget) {
  return scan_all_fitting(p, budget, false).min_rank;
}

OptimalSpaces optimal_column_spaces(const IndexCodingProblem& p, const Budget& budget) {
  const auto scan = scan_all_fitting(p, budget, true);
  OptimalSpaces out;
  out.length = scan.min_rank;
  for (const auto& key : scan.spaces) {
    std::vector<BitVector> rows;
    rows.reserve(key.size());
    for (const auto mask : key) {
      rows.push_back(BitVector::from_mask(p.n(), mask));
    }
    out.spaces.push_back(Subspace::span_of(p.n(), rows));
  }
  std::sort(out.spaces.begin(), out.spaces.end());
  return out;
}

IndexCode::IndexCode(std::vector<BitVector> codewords) : codewords_(std::move(codewords)) {
  if (codewords_.empty()) {
    throw std::invalid_argument("an index code needs at least one codeword");
  }
  for (const auto& w : codewords_) {
    if (w.size() != codewords_.front().size()) {
      throw std::invalid_argument("codewords must share one length");
    }
  }
  if (span_dimension(codewords_) != codewords_.size()) {
    throw std::invalid_argument("codewords of an index code must be linearly independent");
  }
  std::sort(codewords_.begin(), codewords_.end());
}

std::vector<std::string> IndexCode::render() const {
  std::vector<std::string> out;
  out.reserve(codewords_.size());
  for (const auto& w : codewords_) {
    out.push_back(render_codeword(w));
  }
  return out;
}

std::string render_codeword(const BitVector& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word.get(k)) {
      if (!out.empty()) {
        out += '+';
      }
      out += 'x';
      out += std::to_string(k + 1);
    }
  }
  return out.empty() ? "0" : out;
}

BitVector parse_codeword(std::size_t n, std::string_view text) {
  BitVector word(n);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('+', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto term = text.substr(pos, end - pos);
    while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (term.size() < 2 || term.front() != 'x') {
      throw std::invalid_argument("codeword term '" + std::string(term) + "' is not of the form xK");
    }
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(term.data() + 1, term.data() + term.size(), k);
    if (ec != std::errc() || ptr != term.data() + term.size() || k < 1 || k > n) {
      throw std::invalid_argument("codeword term '" + std::string(term) + "' names no message in 1.." +
                                  std::to_string(n));
    }
    word.flip(k - 1);
    pos = end + 1;
  }
  return word;
}

OptimalCodeEnumerator::OptimalCodeEnumerator(const IndexCodingProblem& p, const Budget& budget)
    : spaces_(optimal_column_spaces(p, budget)) {}

bool OptimalCodeEnumerator::next(IndexCode& out) {
  while (space_index_ < spaces_.spaces.size()) {
    if (!bases_) {
      bases_.emplace(spaces_.spaces[space_index_]);
    }
    if (bases_->next(scratch_)) {
      out = IndexCode(scratch_);
      return true;
    }
    bases_.reset();
    ++space_index_;
  }
  return false;
}

std::vector<IndexCode> optimal_codes(const IndexCodingProblem& p, const Budget& budget) {
  OptimalCodeEnumerator en(p, budget);
  std::vector<IndexCode> codes;
  IndexCode code;
  while (en.next(code)) {
    codes.push_back(code);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::uint64_t theorem2_lower_bound(std::size_t c) {
  if (c == 0) {
    throw std::invalid_argument("code length must be at least 1");
  }
  if (c > 11) {
    throw std::overflow_error("basis count for length " + std::to_string(c) + " exceeds 64 bits");
  }
  u128 product = 1;
  u128 factorial = 1;
  const u128 full = static_cast<u128>(1) << c;
  for (std::size_t i = 0; i < c; ++i) {
    product *= full - (static_cast<u128>(1) << i);
    factorial *= i + 1;
  }
  const u128 result = product / factorial;
  if (result > UINT64_MAX) {
    throw std::overflow_error("basis count for length " + std::to_string(c) + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::size_t s_prime_exponent(const IndexCodingProblem& p, std::size_t c) {
  const std::size_t n = p.n();
  return n * n * c - n * n + side_info_total(p);
}

bool is_s_prime_member(const IndexCodingProblem& p, std::size_t c, const BitMatrix& t) {
  const std::size_t n = p.n();
  const std::size_t rows = n * c + side_info_total(p);
  if (t.rows() != rows || t.cols() != n) {
    return false;
  }
  if (build_A(p, c).transpose() * t != BitMatrix::identity(n)) {
    return false;
  }
  const auto entries = side_info_entries(p);
  for (std::size_t s = 0; s < entries.size(); ++s) {
    for (std::size_t col = 0; col < n; ++col) {
      if (col != entries[s].receiver - 1 && t.get(n * c + s, col)) {
        return false;
      }
    }
  }
  return true;
}

SPrimeEnumerator::SPrimeEnumerator(const IndexCodingProblem& p, std::size_t c, const Budget& budget) {
  if (c == 0) {
    throw std::invalid_argument("code length must be at least 1");
  }
  const std::size_t n = p.n();
  const auto exponent = s_prime_exponent(p, c);
  if (exponent > budget.s_prime_bits || exponent > 62) {
    throw BudgetExceeded(budget_message("S'(" + std::to_string(c) + ") enumeration", exponent, budget.s_prime_bits));
  }
  const BitMatrix at = build_A(p, c).transpose();
  const auto entries = side_info_entries(p);
  current_.c = c;
  current_.t = BitMatrix(at.cols(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::size_t> forced;
    for (std::size_t s = 0; s < entries.size(); ++s) {
      if (entries[s].receiver - 1 != col) {
        forced.push_back(n * c + s);
      }
    }
    const auto solutions = solve_affine(at, BitVector::unit(n, col), forced);
    if (!solutions) {
      throw std::logic_error("A^T t = e_j has no solution although A has full column rank");
    }
    for (std::size_t r = 0; r < at.cols(); ++r) {
      if (solutions->particular().get(r)) {
        current_.t.set(r, col);
      }
    }
    for (const auto& d : solutions->directions()) {
      directions_.push_back(Direction{col, d});
    }
  }
  if (directions_.size() != exponent) {
    throw std::logic_error("S'(c) dimension disagrees with n^2 c - n^2 + sum |K_i|");
  }
}

const CandidateT* SPrimeEnumerator::next() {
  if (step_ == size()) {
    return nullptr;
  }
  if (step_ > 0) {
    const auto& d = directions_[static_cast<std::size_t>(std::countr_zero(step_))];
    const auto words = d.rows.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (auto bits = words[w]; bits != 0; bits &= bits - 1) {
        current_.t.flip(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)), d.column);
      }
    }
  }
  ++step_;
  return &current_;
}

bool lemma1_membership(const BitMatrix& t, std::size_t n, std::size_t c) {
  for (std::size_t i = 0; i < c; ++i) {
    const BitVector* direction = nullptr;
    for (std::size_t k = 0; k < n; ++k) {
      const BitVector& col = t.row(k * c + i);
      if (col.is_zero()) {
        continue;
      }
      if (direction == nullptr) {
        direction = &col;
      } else if (col != *direction) {
        return false;
      }
    }
  }
  return true;
}

std::size_t lambda_of(const BitMatrix& t, std::size_t n, std::size_t c) {
  std::size_t zero_groups = 0;
  for (std::size_t i = 0; i < c; ++i) {
    bool all_zero = true;
    for (std::size_t k = 0; k < n && all_zero; ++k) {
      all_zero = t.row(k * c + i).is_zero();
    }
    zero_groups += all_zero ? 1 : 0;
  }
  return zero_groups;
}

std::uint64_t count_bf_pairs(std::size_t n, std::size_t lambda) {
  if (n + 1 >= 64) {
    throw std::overflow_error("(B, F) pair count exceeds 64 bits");
  }
  const std::uint64_t base = (std::uint64_t{1} << (n + 1)) - 1;
  u128 total = 1;
  for (std::size_t i = 0; i < lambda; ++i) {
    total *= base;
    if (total > UINT64_MAX) {
      throw std::overflow_error("(B, F) pair count exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_bf_pairs(const CandidateT& t, std::size_t n) {
  if (!lemma1_membership(t, n)) {
    throw std::invalid_argument("candidate does not factor as B F");
  }
  return count_bf_pairs(n, lambda_of(t, n));
}

TransferDecomposition recover_decomposition(const CandidateT& t, const IndexCodingProblem& p) {
  const std::size_t n = p.n();
  const std::size_t c = t.c;
  const auto entries = side_info_entries(p);
  if (t.t.rows() != n * c + entries.size() || t.t.cols() != n) {
    throw std::invalid_argument("candidate shape does not match the problem");
  }
  if (!lemma1_membership(t, n)) {
    throw std::invalid_argument("candidate is not a member of S(c): some slot group spans two dimensions");
  }
  auto d = TransferDecomposition::zero(p, c);
  for (std::size_t i = 0; i < c; ++i) {
    const BitVector* direction = nullptr;
    for (std::size_t k = 0; k < n && direction == nullptr; ++k) {
      if (!t.t.row(k * c + i).is_zero()) {
        direction = &t.t.row(k * c + i);
      }
    }
    if (direction == nullptr) {
      continue;
    }
    d.eps.usage.row(i) = *direction;
    for (std::size_t k = 0; k < n; ++k) {
      if (t.t.row(k * c + i) == *direction) {
        d.beta.coefficients.set(i, k);
      }
    }
  }
  for (std::size_t s = 0; s < entries.size(); ++s) {
    d.eps.sigma[s] = t.t.get(n * c + s, entries[s].receiver - 1);
  }
  return d;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kOptimal:
      return "optimal";
    case Verdict::kFeasibleSuboptimal:
      return "feasible-but-suboptimal";
    case Verdict::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

Theorem1Result theorem1_verify(const IndexCodingProblem& p, std::size_t c, const Budget& budget,
                               bool keep_candidates) {
  const std::size_t n = p.n();
  SPrimeEnumerator candidates(p, c, budget);
  const BitMatrix identity = BitMatrix::identity(n);

  Theorem1Result result;
  result.length = c;
  result.s_prime_size = candidates.size();
  result.lambda_histogram.assign(c + 1, 0);
  if (keep_candidates) {
    result.candidates.reserve(static_cast<std::size_t>(candidates.size()));
  }
  while (const CandidateT* t = candidates.next()) {
    if (keep_candidates) {
      result.candidates.push_back(*t);
    }
    if (!lemma1_membership(*t, n)) {
      continue;
    }
    const auto d = recover_decomposition(*t, p);
    if (transfer_matrix_direct(p, d) != identity) {
      throw std::logic_error("a factorable right inverse failed to realize M = I");
    }
    ++result.s_size;
    const auto lambda = lambda_of(*t, n);
    ++result.lambda_histogram[lambda];
    if (lambda > 0 && !result.positive_lambda_example) {
      result.positive_lambda_example = *t;
    }
  }
  if (result.s_size == 0) {
    result.verdict = Verdict::kInfeasible;
  } else if (result.s_size == result.lambda_histogram[0]) {
    result.verdict = Verdict::kOptimal;
  } else {
    result.verdict = Verdict::kFeasibleSuboptimal;
  }
  return result;
}

bool corollary2_check(const IndexCodingProblem& p, const Budget& budget) {
  const auto report = full_report(p, budget);
  const bool meets_bound = report.code_count == report.lower_bound;
  if (is_single_uniprior(p)) {
    return report.mu == 1 && meets_bound;
  }
  return meets_bound;
}

OptimalityReport full_report(const IndexCodingProblem& p, const Budget& budget) {
  OptimalCodeEnumerator en(p, budget);
  OptimalityReport report;
  report.optimal_length = en.spaces().length;
  report.mu = en.spaces().mu();
  report.lower_bound = theorem2_lower_bound(report.optimal_length);
  const u128 expected = static_cast<u128>(report.mu) * report.lower_bound;
  if (budget.listing_bits >= 63 ? false : expected > (std::uint64_t{1} << budget.listing_bits)) {
    throw BudgetExceeded("listing all optimal codes needs " + std::to_string(static_cast<std::uint64_t>(expected)) +
                         " entries but the budget is 2^" + std::to_string(budget.listing_bits) +
                         " (raise ICOPT_BUDGET_BITS to allow it)");
  }
  IndexCode code;
  while (en.next(code)) {
    report.codes.push_back(code);
  }
  std::sort(report.codes.begin(), report.codes.end());
  report.code_count = report.codes.size();
  if (report.code_count != expected) {
    throw std::logic_error("optimal code count differs from mu times the basis count");
  }
  return report;
}

}  // namespace icopt
