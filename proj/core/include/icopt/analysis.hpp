#pragma once

// Ranking of optimal codes by the largest number of broadcasts any single
// receiver has to combine. Side information is free.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "icopt/problem.hpp"
#include "icopt/solver.hpp"

namespace icopt {

/// The code cannot serve some receiver at all.
class UndecodableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecodingPlan {
  std::size_t receiver = 0;                     // 1-based
  std::vector<std::size_t> used_transmissions;  // 1-based codeword indices, ascending
  std::vector<std::size_t> used_side_info;      // 1-based message indices, ascending
};

struct TransmissionCount {
  std::size_t count = 0;
  DecodingPlan plan;
};

/// Fewest codewords receiver i must combine. Ties go to the lexicographically
/// smallest coefficient vector (a_1 compared first). Throws UndecodableError.
[[nodiscard]] TransmissionCount min_transmissions(const IndexCode& code, const IndexCodingProblem& p,
                                                  std::size_t receiver);

/// XOR of the plan's codewords and side-information unit vectors.
[[nodiscard]] BitVector evaluate_plan(const IndexCode& code, const DecodingPlan& plan);

struct CodeCost {
  std::vector<std::size_t> per_receiver;
  std::size_t max_used = 0;
};

[[nodiscard]] CodeCost code_cost(const IndexCode& code, const IndexCodingProblem& p);

struct CostedCode {
  IndexCode code;
  CodeCost cost;
  bool winner = false;
};

struct BestCodes {
  std::size_t min_max = 0;
  std::vector<IndexCode> winners;  // canonical order
  std::vector<CostedCode> table;   // every optimal code, canonical order
};

[[nodiscard]] BestCodes select_best_codes(const IndexCodingProblem& p, const Budget& budget = {});

}  // namespace icopt
