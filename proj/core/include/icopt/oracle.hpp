#pragma once

// Brute-force ground truth. Searches subspaces directly and checks
// decodability by plain elimination, sharing nothing with the solver beyond
// the subspace walk. Only for n <= 5.

#include <cstddef>
#include <vector>

#include "icopt/problem.hpp"
#include "icopt/solver.hpp"

namespace icopt::oracle {

inline constexpr std::size_t kMaxMessages = 5;

/// The problem is too large for exhaustive search.
class SizeLimitExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// Every receiver i has e_i in span(code plus its side-information units).
[[nodiscard]] bool is_decodable(const std::vector<BitVector>& code, const IndexCodingProblem& p);

/// Smallest dimension of a decodable subspace of GF(2)^n.
[[nodiscard]] std::size_t brute_optimal_length(const IndexCodingProblem& p);

/// All decodable codes of length c, as sorted unordered codeword sets.
[[nodiscard]] std::vector<IndexCode> brute_enumerate_codes(const IndexCodingProblem& p, std::size_t c);

}  // namespace icopt::oracle
