#include "icopt/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace icopt::oracle {

namespace {

void require_small(const IndexCodingProblem& p) {
  if (p.n() > kMaxMessages) {
    throw SizeLimitExceeded("the brute-force oracle handles at most " + std::to_string(kMaxMessages) +
                            " messages, got " + std::to_string(p.n()));
  }
}

std::uint64_t mask_of(const BitVector& v) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v.get(k)) m |= std::uint64_t{1} << k;
  }
  return m;
}

// Textbook elimination keyed by highest set bit.
struct XorBasis {
  std::uint64_t by_top[64] = {};

  std::uint64_t reduce(std::uint64_t x) const {
    for (int b = 63; b >= 0 && x != 0; --b) {
      if (((x >> b) & 1U) && by_top[b] != 0) x ^= by_top[b];
    }
    return x;
  }

  bool insert(std::uint64_t x) {
    x = reduce(x);
    if (x == 0) return false;
    int top = 63;
    while (((x >> top) & 1U) == 0) --top;
    by_top[top] = x;
    return true;
  }
};

bool decodable_masks(const std::vector<std::uint64_t>& code, const IndexCodingProblem& p) {
  for (std::size_t i = 1; i <= p.n(); ++i) {
    XorBasis basis;
    for (const auto w : code) basis.insert(w);
    for (const auto k : p.knows(i)) basis.insert(std::uint64_t{1} << (k - 1));
    if (basis.reduce(std::uint64_t{1} << (i - 1)) != 0) return false;
  }
  return true;
}

bool independent(const std::vector<std::uint64_t>& words) {
  XorBasis basis;
  for (const auto w : words) {
    if (!basis.insert(w)) return false;
  }
  return true;
}

}  // namespace

bool is_decodable(const std::vector<BitVector>& code, const IndexCodingProblem& p) {
  std::vector<std::uint64_t> masks;
  for (const auto& w : code) {
    if (w.size() != p.n()) {
      throw std::invalid_argument("codeword length differs from the message count");
    }
    masks.push_back(mask_of(w));
  }
  return decodable_masks(masks, p);
}

std::size_t brute_optimal_length(const IndexCodingProblem& p) {
  require_small(p);
  for (std::size_t c = 1; c <= p.n(); ++c) {
    SubspaceEnumerator spaces(p.n(), c);
    Subspace s;
    while (spaces.next(s)) {
      if (is_decodable(s.basis(), p)) return c;
    }
  }
  return p.n();
}

std::vector<IndexCode> brute_enumerate_codes(const IndexCodingProblem& p, std::size_t c) {
  require_small(p);
  if (c == 0 || c > p.n()) {
    return {};
  }
  std::set<IndexCode> codes;
  SubspaceEnumerator spaces(p.n(), c);
  Subspace s;
  while (spaces.next(s)) {
    if (!is_decodable(s.basis(), p)) continue;
    std::vector<BitVector> nonzero;
    for (const auto& e : s.elements()) {
      if (!e.is_zero()) nonzero.push_back(e);
    }
    // Every c-subset of the nonzero elements that is independent.
    std::vector<bool> pick(nonzero.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(c), true);
    do {
      std::vector<BitVector> chosen;
      std::vector<std::uint64_t> masks;
      for (std::size_t j = 0; j < nonzero.size(); ++j) {
        if (pick[j]) {
          chosen.push_back(nonzero[j]);
          masks.push_back(mask_of(nonzero[j]));
        }
      }
      if (independent(masks)) codes.insert(IndexCode(chosen));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {codes.begin(), codes.end()};
}

}  // namespace icopt::oracle
