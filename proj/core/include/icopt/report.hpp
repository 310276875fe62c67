#pragma once

// JSON renderings of the command reports. Key order is fixed so output is
// byte-stable.

#include <cstddef>
#include <string>

#include "icopt/analysis.hpp"
#include "icopt/problem.hpp"
#include "icopt/solver.hpp"

namespace icopt {

[[nodiscard]] std::string render_solve(const OptimalityReport& report);

/// Candidates are included only when result.candidates is non-empty.
[[nodiscard]] std::string render_verify(const Theorem1Result& result);

/// Without minmax the min_max, winners and winner fields are left out.
[[nodiscard]] std::string render_analysis(const BestCodes& best, bool minmax);

/// A, F_pattern and B_pattern for length c, plus a realizing decomposition
/// built from the first optimal code when c is at least the optimal length
/// (extra slots broadcast nothing), else null.
[[nodiscard]] std::string render_matrices(const IndexCodingProblem& p, std::size_t c, const Budget& budget);

[[nodiscard]] std::string render_oracle(const IndexCodingProblem& p);

}  // namespace icopt
