#include "icopt/report.hpp"

#include "icopt/netcode.hpp"
#include "icopt/oracle.hpp"
#include "json.hpp"

namespace icopt {

namespace {

using nlohmann::ordered_json;

ordered_json rows_of(const BitMatrix& m) {
  auto out = ordered_json::array();
  for (const auto& r : m.to_strings()) out.push_back(r);
  return out;
}

ordered_json code_json(const IndexCode& code) {
  auto out = ordered_json::array();
  for (const auto& w : code.render()) out.push_back(w);
  return out;
}

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string render_solve(const OptimalityReport& report) {
  ordered_json doc;
  doc["optimal_length"] = report.optimal_length;
  doc["mu"] = report.mu;
  doc["lower_bound"] = report.lower_bound;
  doc["code_count"] = report.code_count;
  doc["codes"] = ordered_json::array();
  for (const auto& code : report.codes) doc["codes"].push_back(code_json(code));
  return finish(doc);
}

std::string render_verify(const Theorem1Result& result) {
  ordered_json doc;
  doc["length"] = result.length;
  doc["verdict"] = std::string(to_string(result.verdict));
  doc["s_prime_size"] = result.s_prime_size;
  doc["s_size"] = result.s_size;
  doc["lambda_histogram"] = result.lambda_histogram;
  if (result.positive_lambda_example) {
    doc["positive_lambda_example"] = rows_of(result.positive_lambda_example->t);
  } else {
    doc["positive_lambda_example"] = nullptr;
  }
  if (!result.candidates.empty()) {
    doc["candidates"] = ordered_json::array();
    for (const auto& t : result.candidates) doc["candidates"].push_back(rows_of(t.t));
  }
  return finish(doc);
}

std::string render_analysis(const BestCodes& best, bool minmax) {
  ordered_json doc;
  if (minmax) {
    doc["min_max"] = best.min_max;
    doc["winners"] = ordered_json::array();
    for (const auto& code : best.winners) doc["winners"].push_back(code_json(code));
  }
  doc["codes"] = ordered_json::array();
  for (const auto& row : best.table) {
    ordered_json entry;
    entry["code"] = code_json(row.code);
    entry["per_receiver"] = row.cost.per_receiver;
    entry["max_used"] = row.cost.max_used;
    if (minmax) entry["winner"] = row.winner;
    doc["codes"].push_back(std::move(entry));
  }
  return finish(doc);
}

std::string render_matrices(const IndexCodingProblem& p, std::size_t c, const Budget& budget) {
  ordered_json doc;
  doc["n"] = p.n();
  doc["c"] = c;
  doc["A"] = rows_of(build_A(p, c));
  doc["F_pattern"] = rows_of(F_pattern(p, c));
  doc["B_pattern"] = rows_of(B_pattern(p, c));

  OptimalCodeEnumerator codes(p, budget);
  IndexCode first;
  if (c >= codes.spaces().length && codes.next(first)) {
    auto words = first.codewords();
    while (words.size() < c) words.emplace_back(p.n());
    const auto d = decompose_code(p, words);
    ordered_json solution;
    auto rendered = ordered_json::array();
    for (const auto& w : words) rendered.push_back(render_codeword(w));
    solution["codewords"] = std::move(rendered);
    solution["F"] = rows_of(build_F(p, c, d.beta));
    solution["B"] = rows_of(build_B(p, c, d.eps));
    solution["M"] = rows_of(transfer_matrix(p, c, d));
    doc["solution"] = std::move(solution);
  } else {
    doc["solution"] = nullptr;
  }
  return finish(doc);
}

std::string render_oracle(const IndexCodingProblem& p) {
  const auto length = oracle::brute_optimal_length(p);
  const auto codes = oracle::brute_enumerate_codes(p, length);
  ordered_json doc;
  doc["optimal_length"] = length;
  doc["code_count"] = codes.size();
  doc["codes"] = ordered_json::array();
  for (const auto& code : codes) doc["codes"].push_back(code_json(code));
  return finish(doc);
}

}  // namespace icopt
