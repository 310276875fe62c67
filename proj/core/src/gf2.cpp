#include "icopt/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace icopt {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {
  if (length == 0) {
    throw std::invalid_argument("BitVector length must be positive");
  }
}

BitVector BitVector::from_mask(std::size_t length, std::uint64_t mask) {
  BitVector v(length);
  if (length < 64) {
    mask &= (std::uint64_t{1} << length) - 1;
  }
  v.words_[0] = mask;
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (const auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return length_;
}

std::uint64_t BitVector::to_mask() const {
  if (length_ > 64) {
    throw std::logic_error("BitVector::to_mask on a vector longer than 64 bits");
  }
  return words_.empty() ? 0 : words_[0];
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) {
      out[i] = '1';
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitVector xor of mismatched lengths");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto cmp = a.length_ <=> b.length_; cmp != 0) {
    return cmp;
  }
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto cmp = a.words_[w] <=> b.words_[w]; cmp != 0) {
      return cmp;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto w : v.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  if (rows.empty()) {
    throw std::invalid_argument("BitMatrix::from_rows needs at least one row");
  }
  BitMatrix m;
  m.cols_ = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) {
      throw std::invalid_argument("BitMatrix rows must share one length");
    }
  }
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto r : rows) {
    parsed.push_back(BitVector::from_string(r));
  }
  return from_rows(std::move(parsed));
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(std::max<std::size_t>(rows(), 1));
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) {
      v.set(r);
    }
  }
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) {
        t.set(c, r);
      }
    }
  }
  return t;
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.is_zero(); });
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : data_) {
    out.push_back(r.to_string());
  }
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("BitMatrix product with mismatched shapes");
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVector& dst = out.row(r);
    const BitVector& src = a.row(r);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (src.get(k)) {
        dst ^= b.row(k);
      }
    }
  }
  return out;
}

RowEchelon rref(const BitMatrix& m) {
  RowEchelon result{m, {}};
  BitMatrix& work = result.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < work.rows() && !work.get(found, col)) {
      ++found;
    }
    if (found == work.rows()) {
      continue;
    }
    std::swap(work.row(found), work.row(pivot_row));
    for (std::size_t r = 0; r < work.rows(); ++r) {
      if (r != pivot_row && work.get(r, col)) {
        work.row(r) ^= work.row(pivot_row);
      }
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  return result;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

std::size_t span_dimension(std::span<const BitVector> vectors) {
  if (vectors.empty()) {
    return 0;
  }
  return rank(BitMatrix::from_rows({vectors.begin(), vectors.end()}));
}

std::size_t rank_of_masks(std::span<const std::uint64_t> rows) {
  // xor basis keyed by leading bit
  std::uint64_t basis[64] = {};
  std::size_t r = 0;
  for (auto x : rows) {
    while (x != 0) {
      const int lead = 63 - std::countl_zero(x);
      if (basis[lead] == 0) {
        basis[lead] = x;
        ++r;
        break;
      }
      x ^= basis[lead];
    }
  }
  return r;
}

BitVector AffineSolutionSet::member(std::uint64_t index) const {
  BitVector x = particular_;
  for (std::size_t d = 0; d < directions_.size(); ++d) {
    if ((index >> d) & 1U) {
      x ^= directions_[d];
    }
  }
  return x;
}

std::optional<AffineSolutionSet> solve_affine(const BitMatrix& a, const BitVector& b,
                                              std::span<const std::size_t> forced_zero) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve_affine: right-hand side length differs from row count");
  }
  const std::size_t unknowns = a.cols();
  std::vector<bool> pinned(unknowns, false);
  for (const auto k : forced_zero) {
    if (k >= unknowns) {
      throw std::out_of_range("solve_affine: forced-zero index out of range");
    }
    pinned[k] = true;
  }
  std::vector<std::size_t> live;  // unknowns that may be nonzero
  for (std::size_t k = 0; k < unknowns; ++k) {
    if (!pinned[k]) {
      live.push_back(k);
    }
  }

  // Augmented system over the live unknowns; last column is b.
  BitMatrix aug(a.rows(), live.size() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < live.size(); ++j) {
      if (a.get(r, live[j])) {
        aug.set(r, j);
      }
    }
    if (b.get(r)) {
      aug.set(r, live.size());
    }
  }
  const RowEchelon ech = rref(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == live.size()) {
    return std::nullopt;
  }

  std::vector<bool> is_pivot(live.size(), false);
  for (const auto p : ech.pivots) {
    is_pivot[p] = true;
  }

  BitVector particular(unknowns);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.matrix.get(i, live.size())) {
      particular.set(live[ech.pivots[i]]);
    }
  }

  std::vector<BitVector> directions;
  for (std::size_t f = 0; f < live.size(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    BitVector d(unknowns);
    d.set(live[f]);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (ech.matrix.get(i, f)) {
        d.set(live[ech.pivots[i]]);
      }
    }
    directions.push_back(std::move(d));
  }
  return AffineSolutionSet(std::move(particular), std::move(directions));
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim == 0) {
    throw std::invalid_argument("Subspace ambient dimension must be positive");
  }
}

Subspace Subspace::span_of(std::size_t ambient_dim, std::span<const BitVector> vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) {
    return s;
  }
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) {
      throw std::invalid_argument("Subspace::span_of: vector length differs from ambient dimension");
    }
  }
  const RowEchelon ech = rref(BitMatrix::from_rows({vectors.begin(), vectors.end()}));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    s.basis_.push_back(ech.matrix.row(i));
  }
  return s;
}

bool Subspace::contains(const BitVector& v) const {
  if (v.size() != ambient_dim_) {
    return false;
  }
  BitVector rest = v;
  for (const auto& b : basis_) {
    if (rest.get(b.first_set())) {
      rest ^= b;
    }
  }
  return rest.is_zero();
}

std::vector<BitVector> Subspace::elements() const {
  if (basis_.size() >= 32) {
    throw std::length_error("Subspace::elements: dimension too large to list");
  }
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << basis_.size());
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << basis_.size()); ++idx) {
    BitVector v(ambient_dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if ((idx >> i) & 1U) {
        v ^= basis_[i];
      }
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
  std::size_t h = s.ambient_dim();
  for (const auto& b : s.basis()) {
    h ^= BitVectorHash{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BasisEnumerator::BasisEnumerator(const Subspace& space) : dim_(space.dim()) {
  if (dim_ == 0) {
    throw std::invalid_argument("BasisEnumerator needs a subspace of positive dimension");
  }
  if (dim_ > 63) {
    throw std::length_error("BasisEnumerator: dimension too large");
  }
  auto all = space.elements();
  const auto& basis = space.basis();
  for (auto& v : all) {
    if (v.is_zero()) {
      continue;
    }
    // Coordinates: rref basis vector i owns pivot column first_set(i).
    std::uint64_t coord = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (v.get(basis[i].first_set())) {
        coord |= std::uint64_t{1} << i;
      }
    }
    elements_.push_back(std::move(v));
    coords_.push_back(coord);
  }
  chosen_.assign(dim_, 0);
  reducers_.assign(dim_ + 1, std::vector<std::uint64_t>(dim_, 0));
}

bool BasisEnumerator::seek(std::size_t depth, std::size_t from) {
  const std::size_t need_after = dim_ - depth - 1;
  for (std::size_t j = from; j + need_after < elements_.size(); ++j) {
    std::uint64_t x = coords_[j];
    auto reduced = reducers_[depth];
    while (x != 0) {
      const int lead = 63 - std::countl_zero(x);
      if (reduced[lead] == 0) {
        reduced[lead] = x;
        chosen_[depth] = j;
        reducers_[depth + 1] = std::move(reduced);
        return true;
      }
      x ^= reduced[lead];
    }
  }
  return false;
}

bool BasisEnumerator::next(std::vector<BitVector>& basis) {
  if (done_) {
    return false;
  }
  // Depth-first over strictly increasing index tuples, so each unordered set
  // is reached exactly once.
  std::size_t depth = 0;
  std::size_t from = 0;
  if (started_) {
    depth = dim_ - 1;
    from = chosen_[depth] + 1;
  }
  started_ = true;
  while (true) {
    if (seek(depth, from)) {
      if (depth + 1 == dim_) {
        break;
      }
      ++depth;
      from = chosen_[depth - 1] + 1;
    } else {
      if (depth == 0) {
        done_ = true;
        return false;
      }
      --depth;
      from = chosen_[depth] + 1;
    }
  }
  basis.clear();
  for (std::size_t d = 0; d < dim_; ++d) {
    basis.push_back(elements_[chosen_[d]]);
  }
  return true;
}

SubspaceEnumerator::SubspaceEnumerator(std::size_t ambient_dim, std::size_t dim)
    : n_(ambient_dim), c_(dim) {
  if (ambient_dim == 0 || dim > ambient_dim) {
    throw std::invalid_argument("SubspaceEnumerator requires 0 <= dim <= ambient_dim and ambient_dim > 0");
  }
  pivots_.resize(c_);
  for (std::size_t i = 0; i < c_; ++i) {
    pivots_[i] = i;
  }
  reset_free_entries();
}

void SubspaceEnumerator::reset_free_entries() {
  free_.clear();
  for (std::size_t r = 0; r < c_; ++r) {
    for (std::size_t col = pivots_[r] + 1; col < n_; ++col) {
      if (std::find(pivots_.begin(), pivots_.end(), col) == pivots_.end()) {
        free_.emplace_back(r, col);
      }
    }
  }
  if (free_.size() >= 63) {
    throw std::length_error("SubspaceEnumerator: too many free entries");
  }
  assignment_ = 0;
}

bool SubspaceEnumerator::next_pivots() {
  // Next c-combination of {0..n-1} in lexicographic order.
  std::size_t i = c_;
  while (i > 0) {
    --i;
    if (pivots_[i] < n_ - c_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < c_; ++j) {
        pivots_[j] = pivots_[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

bool SubspaceEnumerator::next(Subspace& out) {
  if (done_) {
    return false;
  }
  std::vector<BitVector> rows;
  rows.reserve(c_);
  for (std::size_t r = 0; r < c_; ++r) {
    rows.push_back(BitVector::unit(n_, pivots_[r]));
  }
  for (std::size_t f = 0; f < free_.size(); ++f) {
    if ((assignment_ >> f) & 1U) {
      rows[free_[f].first].set(free_[f].second);
    }
  }
  // The rows are already in rref, so span_of reproduces them unchanged.
  out = Subspace::span_of(n_, rows);

  ++assignment_;
  if (assignment_ == (std::uint64_t{1} << free_.size())) {
    if (c_ == 0 || !next_pivots()) {
      done_ = true;
    } else {
      reset_free_entries();
    }
  }
  return true;
}

}  // namespace icopt
