#include "icopt/analysis.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

namespace icopt {

namespace {

// Coefficient vectors in lexicographic order with a_1 first: a_1 is the most
// significant bit of the counter.
bool coefficient(std::uint64_t counter, std::size_t j, std::size_t c) { return (counter >> (c - 1 - j)) & 1U; }

}  // namespace

TransmissionCount min_transmissions(const IndexCode& code, const IndexCodingProblem& p, std::size_t receiver) {
  if (receiver < 1 || receiver > p.n()) {
    throw std::out_of_range("receiver " + std::to_string(receiver) + " does not exist");
  }
  if (code.n() != p.n()) {
    throw std::invalid_argument("code and problem disagree on the message count");
  }
  const std::size_t c = code.length();
  if (c > 24) {
    throw BudgetExceeded("decoding search over 2^" + std::to_string(c) + " combinations is too large");
  }
  const auto known = p.known_mask(receiver);
  const auto& words = code.codewords();

  std::optional<std::uint64_t> best;
  std::size_t best_weight = 0;
  for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << c); ++counter) {
    const auto weight = static_cast<std::size_t>(std::popcount(counter));
    if (best && weight >= best_weight) {
      continue;
    }
    BitVector sum(p.n());
    for (std::size_t j = 0; j < c; ++j) {
      if (coefficient(counter, j, c)) {
        sum ^= words[j];
      }
    }
    if (!sum.get(receiver - 1)) {
      continue;
    }
    sum.flip(receiver - 1);
    bool covered = true;
    for (std::size_t k = 0; k < p.n() && covered; ++k) {
      covered = !sum.get(k) || ((known >> k) & 1U) != 0;
    }
    if (covered) {
      best = counter;
      best_weight = weight;
    }
  }
  if (!best) {
    throw UndecodableError("receiver " + std::to_string(receiver) + " cannot decode x" + std::to_string(receiver) +
                           " from this code");
  }

  TransmissionCount out;
  out.count = best_weight;
  out.plan.receiver = receiver;
  BitVector sum(p.n());
  for (std::size_t j = 0; j < c; ++j) {
    if (coefficient(*best, j, c)) {
      out.plan.used_transmissions.push_back(j + 1);
      sum ^= words[j];
    }
  }
  for (std::size_t k = 0; k < p.n(); ++k) {
    if (k + 1 != receiver && sum.get(k)) {
      out.plan.used_side_info.push_back(k + 1);
    }
  }
  return out;
}

BitVector evaluate_plan(const IndexCode& code, const DecodingPlan& plan) {
  BitVector sum(code.n());
  for (const auto j : plan.used_transmissions) {
    sum ^= code.codewords().at(j - 1);
  }
  for (const auto k : plan.used_side_info) {
    sum.flip(k - 1);
  }
  return sum;
}

CodeCost code_cost(const IndexCode& code, const IndexCodingProblem& p) {
  CodeCost cost;
  for (std::size_t i = 1; i <= p.n(); ++i) {
    const auto used = min_transmissions(code, p, i).count;
    cost.per_receiver.push_back(used);
    cost.max_used = std::max(cost.max_used, used);
  }
  return cost;
}

BestCodes select_best_codes(const IndexCodingProblem& p, const Budget& budget) {
  const auto report = full_report(p, budget);
  BestCodes best;
  best.min_max = SIZE_MAX;
  for (const auto& code : report.codes) {
    auto cost = code_cost(code, p);
    best.min_max = std::min(best.min_max, cost.max_used);
    best.table.push_back(CostedCode{code, std::move(cost), false});
  }
  for (auto& row : best.table) {
    if (row.cost.max_used == best.min_max) {
      row.winner = true;
      best.winners.push_back(row.code);
    }
  }
  return best;
}

}  // namespace icopt
