#include "icopt/problem.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace icopt {

namespace {

using nlohmann::ordered_json;

void check_index(std::size_t index, std::size_t n, std::string_view what, std::size_t receiver) {
  if (index < 1 || index > n) {
    std::ostringstream msg;
    msg << "receiver " << receiver << ": " << what << " index " << index << " is outside 1.." << n;
    throw ValidationError(msg.str());
  }
}

void check_no_duplicates(const std::vector<std::size_t>& xs, std::string_view what, std::size_t receiver) {
  std::set<std::size_t> seen;
  for (const auto x : xs) {
    if (!seen.insert(x).second) {
      std::ostringstream msg;
      msg << "receiver " << receiver << ": message " << x << " listed twice in " << what;
      throw ValidationError(msg.str());
    }
  }
}

std::vector<std::size_t> read_index_list(const ordered_json& node, std::string_view field, bool allow_scalar) {
  std::vector<std::size_t> out;
  auto read_one = [&](const ordered_json& v) {
    if (!v.is_number_integer()) {
      throw ParseError("\"" + std::string(field) + "\" entries must be integers");
    }
    const auto value = v.get<std::int64_t>();
    if (value < 1) {
      throw ValidationError("\"" + std::string(field) + "\" index " + std::to_string(value) +
                            " must be at least 1");
    }
    out.push_back(static_cast<std::size_t>(value));
  };
  if (allow_scalar && node.is_number_integer()) {
    read_one(node);
  } else if (node.is_array()) {
    for (const auto& v : node) {
      read_one(v);
    }
  } else {
    throw ParseError("\"" + std::string(field) + "\" must be an array of integers");
  }
  return out;
}

ordered_json index_array(const std::vector<std::size_t>& xs) {
  auto arr = ordered_json::array();
  for (const auto x : xs) {
    arr.push_back(x);
  }
  return arr;
}

}  // namespace

IndexCodingProblem IndexCodingProblem::from_side_information(std::vector<std::vector<std::size_t>> known_sets) {
  std::vector<Receiver> receivers;
  receivers.reserve(known_sets.size());
  for (std::size_t i = 0; i < known_sets.size(); ++i) {
    receivers.push_back(Receiver{i + 1, std::move(known_sets[i])});
  }
  const auto n = receivers.size();
  return from_receivers(n, std::move(receivers));
}

IndexCodingProblem IndexCodingProblem::from_receivers(std::size_t n, std::vector<Receiver> receivers) {
  if (n == 0) {
    throw ValidationError("a problem needs at least one message");
  }
  if (n > kMaxMessages) {
    throw ValidationError("at most " + std::to_string(kMaxMessages) + " messages are supported");
  }
  if (receivers.size() != n) {
    throw ValidationError("single-unicast form needs exactly n receivers");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = receivers[i];
    if (r.wants != i + 1) {
      throw ValidationError("receiver " + std::to_string(i + 1) + " must want message " + std::to_string(i + 1));
    }
    for (const auto k : r.knows) {
      check_index(k, n, "known", i + 1);
      if (k == r.wants) {
        throw ValidationError("receiver " + std::to_string(i + 1) + " already knows the message it wants");
      }
    }
    check_no_duplicates(r.knows, "knows", i + 1);
  }
  IndexCodingProblem p;
  p.receivers_ = std::move(receivers);
  return p;
}

std::uint64_t IndexCodingProblem::known_mask(std::size_t i) const {
  std::uint64_t mask = 0;
  for (const auto k : knows(i)) {
    mask |= std::uint64_t{1} << (k - 1);
  }
  return mask;
}

GeneralUnicastProblem::GeneralUnicastProblem(std::size_t n, std::vector<UnicastDemand> receivers)
    : n_(n), receivers_(std::move(receivers)) {
  if (n_ == 0) {
    throw ValidationError("a problem needs at least one message");
  }
  if (receivers_.empty()) {
    throw ValidationError("a problem needs at least one receiver");
  }
  std::map<std::size_t, std::size_t> wanted_by;
  for (std::size_t r = 0; r < receivers_.size(); ++r) {
    const auto& d = receivers_[r];
    if (d.wants.empty()) {
      throw ValidationError("receiver " + std::to_string(r + 1) + " wants nothing");
    }
    check_no_duplicates(d.wants, "wants", r + 1);
    check_no_duplicates(d.knows, "knows", r + 1);
    for (const auto w : d.wants) {
      check_index(w, n_, "wanted", r + 1);
      if (auto [it, fresh] = wanted_by.emplace(w, r + 1); !fresh) {
        throw ValidationError("message " + std::to_string(w) + " is wanted by receivers " +
                              std::to_string(it->second) + " and " + std::to_string(r + 1) +
                              "; unicast requires disjoint wanted sets");
      }
    }
    for (const auto k : d.knows) {
      check_index(k, n_, "known", r + 1);
      if (std::find(d.wants.begin(), d.wants.end(), k) != d.wants.end()) {
        throw ValidationError("receiver " + std::to_string(r + 1) + " both wants and knows message " +
                              std::to_string(k));
      }
    }
  }
}

GeneralUnicastProblem parse_problem(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("problem file must be a JSON object");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("problem file needs an integer \"n\"");
  }
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1) {
    throw ValidationError("\"n\" must be positive");
  }
  if (!doc.contains("receivers") || !doc["receivers"].is_array()) {
    throw ParseError("problem file needs a \"receivers\" array");
  }
  std::vector<UnicastDemand> demands;
  for (const auto& r : doc["receivers"]) {
    if (!r.is_object() || !r.contains("wants")) {
      throw ParseError("each receiver must be an object with \"wants\"");
    }
    UnicastDemand d;
    d.wants = read_index_list(r["wants"], "wants", true);
    if (r.contains("knows")) {
      d.knows = read_index_list(r["knows"], "knows", false);
    }
    demands.push_back(std::move(d));
  }
  return GeneralUnicastProblem(static_cast<std::size_t>(n), std::move(demands));
}

GeneralUnicastProblem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open problem file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize_problem(const GeneralUnicastProblem& p) {
  ordered_json doc;
  doc["n"] = p.n();
  doc["receivers"] = ordered_json::array();
  for (const auto& d : p.receivers()) {
    ordered_json r;
    r["wants"] = index_array(d.wants);
    r["knows"] = index_array(d.knows);
    doc["receivers"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string serialize_problem(const IndexCodingProblem& p) { return serialize_problem(to_general(p)); }

IndexCodingProblem to_single_unicast(const GeneralUnicastProblem& p) {
  std::vector<Receiver> slots(p.n());
  std::vector<bool> covered(p.n(), false);
  for (const auto& d : p.receivers()) {
    for (const auto w : d.wants) {
      slots[w - 1] = Receiver{w, d.knows};
      covered[w - 1] = true;
    }
  }
  for (std::size_t k = 0; k < p.n(); ++k) {
    if (!covered[k]) {
      throw ValidationError("message " + std::to_string(k + 1) +
                            " is wanted by no receiver; remove it and renumber the remaining messages");
    }
  }
  return IndexCodingProblem::from_receivers(p.n(), std::move(slots));
}

GeneralUnicastProblem to_general(const IndexCodingProblem& p) {
  std::vector<UnicastDemand> demands;
  for (const auto& r : p.receivers()) {
    demands.push_back(UnicastDemand{{r.wants}, r.knows});
  }
  return GeneralUnicastProblem(p.n(), std::move(demands));
}

std::size_t side_info_total(const IndexCodingProblem& p) {
  std::size_t total = 0;
  for (const auto& r : p.receivers()) {
    total += r.knows.size();
  }
  return total;
}

std::vector<SideInfoEntry> side_info_entries(const IndexCodingProblem& p) {
  std::vector<SideInfoEntry> out;
  for (const auto& r : p.receivers()) {
    for (const auto k : r.knows) {
      out.push_back(SideInfoEntry{r.wants, k});
    }
  }
  return out;
}

bool is_single_uniprior(const IndexCodingProblem& p) {
  std::set<std::size_t> seen;
  for (const auto& r : p.receivers()) {
    if (r.knows.size() != 1 || !seen.insert(r.knows.front()).second) {
      return false;
    }
  }
  return true;
}

}  // namespace icopt
