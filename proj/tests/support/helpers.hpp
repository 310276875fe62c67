#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "icopt/gf2.hpp"
#include "icopt/problem.hpp"
#include "icopt/solver.hpp"

namespace icopt::testing {

inline BitMatrix matrix(const std::vector<std::string_view>& rows) {
  return BitMatrix::from_strings(std::span<const std::string_view>(rows));
}

inline IndexCode code(std::size_t n, const std::vector<std::string_view>& words) {
  std::vector<BitVector> out;
  for (const auto w : words) out.push_back(parse_codeword(n, w));
  return IndexCode(out);
}

inline std::set<IndexCode> as_set(const std::vector<IndexCode>& codes) { return {codes.begin(), codes.end()}; }

// Side information from an off-diagonal bit pattern: bit (i*(n-1) + slot)
// says receiver i+1 knows the slot-th message other than its own.
inline IndexCodingProblem problem_from_pattern(std::size_t n, std::uint64_t pattern) {
  std::vector<std::vector<std::size_t>> known(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      if ((pattern >> bit++) & 1U) known[i].push_back(k + 1);
    }
  }
  return IndexCodingProblem::from_side_information(std::move(known));
}

inline std::vector<IndexCodingProblem> all_problems(std::size_t n) {
  std::vector<IndexCodingProblem> out;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) out.push_back(problem_from_pattern(n, pattern));
  return out;
}

inline std::vector<IndexCodingProblem> random_problems(std::size_t n, std::size_t count, std::uint32_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IndexCodingProblem> out;
  const std::uint64_t span = std::uint64_t{1} << (n * (n - 1));
  for (std::size_t i = 0; i < count; ++i) out.push_back(problem_from_pattern(n, rng() % span));
  return out;
}

// Unordered bases of span(basis), counted from scratch: every c-subset of
// the span whose xor-closure has 2^c elements.
inline std::uint64_t count_bases_by_subsets(const std::vector<std::uint64_t>& basis) {
  const std::size_t c = basis.size();
  std::vector<std::uint64_t> elements;
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << c); ++a) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < c; ++j) {
      if ((a >> j) & 1U) v ^= basis[j];
    }
    elements.push_back(v);
  }
  std::vector<bool> pick(elements.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(c), true);
  std::uint64_t count = 0;
  do {
    std::set<std::uint64_t> closure{0};
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (!pick[j]) continue;
      std::set<std::uint64_t> next = closure;
      for (const auto x : closure) next.insert(x ^ elements[j]);
      closure = std::move(next);
    }
    if (closure.size() == (std::size_t{1} << c)) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

struct ListedComparison {
  std::size_t verbatim = 0;   // listed matrices found as enumerated
  std::size_t one_entry = 0;  // listed matrices off by one entry from a distinct unlisted candidate
  bool accounted = false;     // every enumerated candidate is explained by exactly one listed matrix
};

// Matches a listed set of T matrices against the enumerated set. A listed
// matrix that is not enumerated must fail membership and be exactly one
// entry away from a single enumerated candidate no other listed matrix
// covers.
inline ListedComparison compare_with_listed(const IndexCodingProblem& p, std::size_t c,
                                            const std::set<std::vector<std::string>>& enumerated,
                                            const std::vector<std::vector<std::string_view>>& listed) {
  ListedComparison out;
  std::set<std::vector<std::string>> covered;
  std::vector<std::vector<std::string>> misprinted;
  for (const auto& rows : listed) {
    const auto m = matrix(rows).to_strings();
    if (enumerated.count(m)) {
      ++out.verbatim;
      covered.insert(m);
    } else if (!is_s_prime_member(p, c, matrix(rows))) {
      misprinted.push_back(m);
    }
  }
  for (const auto& m : misprinted) {
    std::vector<std::vector<std::string>> near;
    for (const auto& e : enumerated) {
      if (covered.count(e) || e.size() != m.size()) continue;
      std::size_t diff = 0;
      for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t k = 0; k < m[r].size(); ++k) diff += m[r][k] != e[r][k] ? 1 : 0;
      }
      if (diff == 1) near.push_back(e);
    }
    if (near.size() == 1 && covered.insert(near.front()).second) ++out.one_entry;
  }
  out.accounted = covered == enumerated && out.verbatim + out.one_entry == listed.size();
  return out;
}

}  // namespace icopt::testing
