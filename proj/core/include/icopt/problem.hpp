#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icopt {

/// Malformed or invalid problem input (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Messages and receivers are 1-based everywhere outside bit positions.
struct Receiver {
  std::size_t wants = 0;
  std::vector<std::size_t> knows;  // K_i, in input order

  friend bool operator==(const Receiver&, const Receiver&) = default;
};

/// Single-unicast problem: receiver i (1-based) wants x_i.
class IndexCodingProblem {
 public:
  /// Largest supported message count; codewords are packed into 64-bit words.
  static constexpr std::size_t kMaxMessages = 64;

  IndexCodingProblem() = default;
  /// Builds from the known-sets K_1..K_n; throws ValidationError.
  static IndexCodingProblem from_side_information(std::vector<std::vector<std::size_t>> known_sets);
  /// Receivers must already be in single-unicast form; throws ValidationError.
  static IndexCodingProblem from_receivers(std::size_t n, std::vector<Receiver> receivers);

  [[nodiscard]] std::size_t n() const { return receivers_.size(); }
  [[nodiscard]] const std::vector<Receiver>& receivers() const { return receivers_; }
  [[nodiscard]] const Receiver& receiver(std::size_t i) const { return receivers_.at(i - 1); }
  [[nodiscard]] const std::vector<std::size_t>& knows(std::size_t i) const { return receiver(i).knows; }
  /// Bit k-1 set iff x_k is in K_i.
  [[nodiscard]] std::uint64_t known_mask(std::size_t i) const;

  friend bool operator==(const IndexCodingProblem&, const IndexCodingProblem&) = default;

 private:
  std::vector<Receiver> receivers_;
};

struct UnicastDemand {
  std::vector<std::size_t> wants;
  std::vector<std::size_t> knows;

  friend bool operator==(const UnicastDemand&, const UnicastDemand&) = default;
};

/// Receivers may want several messages; wanted sets are pairwise disjoint.
class GeneralUnicastProblem {
 public:
  GeneralUnicastProblem() = default;
  /// Throws ValidationError.
  GeneralUnicastProblem(std::size_t n, std::vector<UnicastDemand> receivers);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const std::vector<UnicastDemand>& receivers() const { return receivers_; }

  friend bool operator==(const GeneralUnicastProblem&, const GeneralUnicastProblem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<UnicastDemand> receivers_;
};

/// Parses the JSON problem format:
///   {"n": 3, "receivers": [{"wants": [1], "knows": [2]}, ...]}
/// "wants" may also be a bare integer. Throws ParseError or ValidationError.
[[nodiscard]] GeneralUnicastProblem parse_problem(std::string_view text);
[[nodiscard]] GeneralUnicastProblem load_problem(const std::string& path);

[[nodiscard]] std::string serialize_problem(const GeneralUnicastProblem& p);
[[nodiscard]] std::string serialize_problem(const IndexCodingProblem& p);

/// Splits multi-message receivers and reindexes so receiver i wants x_i.
/// Throws ValidationError if some message is wanted by nobody.
[[nodiscard]] IndexCodingProblem to_single_unicast(const GeneralUnicastProblem& p);
[[nodiscard]] GeneralUnicastProblem to_general(const IndexCodingProblem& p);

/// Sum of |K_i|.
[[nodiscard]] std::size_t side_info_total(const IndexCodingProblem& p);

/// One entry per side-information edge, ordered by receiver and then by the
/// receiver's K_i order. This is the row order of the side-information
/// blocks of A, F, B and T.
struct SideInfoEntry {
  std::size_t receiver;  // 1-based
  std::size_t message;   // 1-based
};
[[nodiscard]] std::vector<SideInfoEntry> side_info_entries(const IndexCodingProblem& p);

/// Each |K_i| = 1 and the known messages are pairwise distinct.
[[nodiscard]] bool is_single_uniprior(const IndexCodingProblem& p);

}  // namespace icopt
