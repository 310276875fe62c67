#pragma once

// Built-in problem instances.

#include <string>
#include <utility>
#include <vector>

#include "icopt/problem.hpp"

namespace icopt::examples {

/// n receivers, R_i knows x_{i+1} (R_n knows x_1).
[[nodiscard]] IndexCodingProblem cyclic_uniprior(std::size_t n);
[[nodiscard]] IndexCodingProblem no_side_info(std::size_t n);

/// n = 3 cyclic uniprior.
[[nodiscard]] IndexCodingProblem example1();
/// n = 3, K_1 = {2, 3}, K_2 = {3}, K_3 = {1}.
[[nodiscard]] IndexCodingProblem example2();
/// n = 4, K_1 = {2}, K_2 = {3}, K_3 = {4, 1}, K_4 = {1}.
[[nodiscard]] IndexCodingProblem example3();
/// n = 4 cyclic uniprior.
[[nodiscard]] IndexCodingProblem example4();

/// File stem and problem for every built-in example, in order.
[[nodiscard]] std::vector<std::pair<std::string, IndexCodingProblem>> all();

}  // namespace icopt::examples
