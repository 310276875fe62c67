#include "icopt/examples.hpp"

namespace icopt::examples {

IndexCodingProblem cyclic_uniprior(std::size_t n) {
  std::vector<std::vector<std::size_t>> known(n);
  for (std::size_t i = 0; i < n; ++i) {
    known[i] = {(i + 1) % n + 1};
  }
  return IndexCodingProblem::from_side_information(std::move(known));
}

IndexCodingProblem no_side_info(std::size_t n) {
  return IndexCodingProblem::from_side_information(std::vector<std::vector<std::size_t>>(n));
}

IndexCodingProblem example1() { return cyclic_uniprior(3); }

IndexCodingProblem example2() { return IndexCodingProblem::from_side_information({{2, 3}, {3}, {1}}); }

IndexCodingProblem example3() { return IndexCodingProblem::from_side_information({{2}, {3}, {4, 1}, {1}}); }

IndexCodingProblem example4() { return cyclic_uniprior(4); }

std::vector<std::pair<std::string, IndexCodingProblem>> all() {
  return {{"example1", example1()}, {"example2", example2()}, {"example3", example3()}, {"example4", example4()}};
}

}  // namespace icopt::examples
