#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "../support/helpers.hpp"
#include "icopt/analysis.hpp"
#include "icopt/examples.hpp"

namespace icopt {
namespace {

using testing::code;

// Fewest codewords whose xor, after removing known messages, is e_i;
// searched by subset size.
std::size_t fewest_by_subsets(const IndexCode& c, const IndexCodingProblem& p, std::size_t i) {
  const auto& words = c.codewords();
  for (std::size_t size = 0; size <= words.size(); ++size) {
    std::vector<bool> pick(words.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      BitVector sum(p.n());
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (pick[j]) sum ^= words[j];
      }
      for (const auto k : p.knows(i)) sum.set(k - 1, false);
      if (sum == BitVector::unit(p.n(), i - 1)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return SIZE_MAX;
}

TEST(MinTransmissions, CyclicThreeFirstCode) {
  const auto p = examples::example1();
  const auto c = code(3, {"x1+x2", "x2+x3"});
  const auto r1 = min_transmissions(c, p, 1);
  EXPECT_EQ(r1.count, 1U);
  EXPECT_EQ(r1.plan.used_transmissions, std::vector<std::size_t>{1});
  EXPECT_EQ(r1.plan.used_side_info, std::vector<std::size_t>{2});
  const auto r3 = min_transmissions(c, p, 3);
  EXPECT_EQ(r3.count, 2U);
  EXPECT_EQ(r3.plan.used_side_info, std::vector<std::size_t>{1});
}

TEST(MinTransmissions, WantedMessageSentAlone) {
  const auto p = examples::example3();
  const auto c = code(4, {"x3", "x1+x2", "x2+x4"});
  EXPECT_EQ(min_transmissions(c, p, 3).count, 1U);
}

TEST(MinTransmissions, TieBreakPrefersFirstCodeword) {
  // R2 knows x1, so g1 = x2 and g2 = x1+x2 each decode x2 alone. Coefficient
  // vectors compare a_1 first, so (0,1) beats (1,0).
  const auto p = IndexCodingProblem::from_side_information({{}, {1}});
  const auto c = code(2, {"x2", "x1+x2"});
  const auto r2 = min_transmissions(c, p, 2);
  EXPECT_EQ(r2.count, 1U);
  EXPECT_EQ(r2.plan.used_transmissions, std::vector<std::size_t>{2});
  EXPECT_EQ(r2.plan.used_side_info, std::vector<std::size_t>{1});
}

TEST(MinTransmissions, UndecodableThrows) {
  const auto p = examples::example1();
  EXPECT_THROW((void)min_transmissions(code(3, {"x1+x2+x3"}), p, 1), UndecodableError);
  EXPECT_THROW((void)min_transmissions(code(3, {"x1+x2"}), p, 4), std::out_of_range);
}

TEST(CodeCost, CyclicThree) {
  const auto p = examples::example1();
  const auto c1 = code_cost(code(3, {"x1+x2", "x2+x3"}), p);
  EXPECT_EQ(c1.per_receiver, (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(c1.max_used, 2U);
  const auto c3 = code_cost(code(3, {"x1+x3", "x1+x2"}), p);
  EXPECT_EQ(c3.per_receiver, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(c3.max_used, 2U);
}

TEST(CodeCost, SingleMessage) {
  EXPECT_EQ(code_cost(code(1, {"x1"}), examples::no_side_info(1)).max_used, 1U);
}

TEST(SelectBest, CyclicThreeAllWin) {
  const auto best = select_best_codes(examples::example1());
  EXPECT_EQ(best.min_max, 2U);
  EXPECT_EQ(best.winners.size(), 3U);
  for (const auto& row : best.table) EXPECT_TRUE(row.winner);
}

TEST(SelectBest, NoSideInformationTwo) {
  const auto best = select_best_codes(examples::no_side_info(2));
  EXPECT_EQ(best.min_max, 1U);
  ASSERT_EQ(best.winners.size(), 1U);
  EXPECT_EQ(best.winners[0], code(2, {"x1", "x2"}));
}

TEST(SelectBest, CyclicFourByExhaustiveCost) {
  const auto p = examples::example4();
  const auto best = select_best_codes(p);
  ASSERT_EQ(best.table.size(), 28U);
  std::size_t min_max = SIZE_MAX;
  std::vector<IndexCode> winners;
  for (const auto& row : best.table) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i <= 4; ++i) worst = std::max(worst, fewest_by_subsets(row.code, p, i));
    EXPECT_EQ(worst, row.cost.max_used);
    if (worst < min_max) {
      min_max = worst;
      winners.clear();
    }
    if (worst == min_max) winners.push_back(row.code);
  }
  EXPECT_EQ(best.min_max, min_max);
  EXPECT_EQ(best.winners, winners);
  // Frozen after the first verified run.
  EXPECT_EQ(best.min_max, 2U);
  EXPECT_EQ(best.winners.size(), 12U);
}

TEST(Analysis, PropertyPlansHoldAndOrderDoesNotMatter) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& p : testing::random_problems(n, 15, static_cast<std::uint32_t>(n * 7))) {
      const auto best = select_best_codes(p);
      const auto report = full_report(p);
      EXPECT_EQ(best.table.size(), report.codes.size());
      for (const auto& w : best.winners) {
        EXPECT_TRUE(std::binary_search(report.codes.begin(), report.codes.end(), w));
      }
      for (const auto& row : best.table) {
        EXPECT_LE(best.min_max, row.cost.max_used);
        EXPECT_EQ(row.cost.max_used, *std::max_element(row.cost.per_receiver.begin(), row.cost.per_receiver.end()));
        for (std::size_t i = 1; i <= n; ++i) {
          const auto r = min_transmissions(row.code, p, i);
          EXPECT_EQ(evaluate_plan(row.code, r.plan), BitVector::unit(n, i - 1));
          EXPECT_EQ(r.count, fewest_by_subsets(row.code, p, i));
          EXPECT_GE(r.count, 1U);
          for (const auto k : r.plan.used_side_info) {
            const auto& known = p.knows(i);
            EXPECT_NE(std::find(known.begin(), known.end(), k), known.end());
          }
          // Build the same code from a shuffled word list.
          auto words = row.code.codewords();
          std::shuffle(words.begin(), words.end(), rng);
          EXPECT_EQ(min_transmissions(IndexCode(words), p, i).count, r.count);
        }
      }
    }
  }
}

}  // namespace
}  // namespace icopt
