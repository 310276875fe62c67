#pragma once

// Equivalent network code of a single-unicast index coding problem.
//
// Sources x_1..x_n feed every broadcast node l_1..l_c; each l_i forwards to
// l'_i, and each l'_i reaches every receiver R_1..R_n. Side information is a
// direct edge x_k -> R_i for k in K_i.
//
// Row orders are fixed:
//   Y  : (x_1,l_1..l_c), (x_2,l_1..l_c), ..., then side-info edges by
//        receiver in K_i order.
//   Y' : (l'_1,R_1..R_n), (l'_2,R_1..R_n), ..., then the same side-info tail.
// With those orders Z = B F A X, where A maps messages to Y, F maps Y to Y'
// and B maps Y' to the decoded outputs.

#include <cstddef>
#include <string>
#include <vector>

#include "icopt/gf2.hpp"
#include "icopt/problem.hpp"

namespace icopt {

enum class VertexKind { kSource, kBroadcast, kRelay, kReceiver };
enum class EdgeKind { kSourceToBroadcast, kBroadcast, kDelivery, kSideInfo };

struct Vertex {
  VertexKind kind;
  std::size_t index;  // 1-based

  [[nodiscard]] std::string name() const;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  Vertex tail;
  Vertex head;
  EdgeKind kind;
};

struct NetworkGraph {
  std::size_t n = 0;
  std::size_t c = 0;
  std::vector<Vertex> vertices;  // x's, l's, l''s, R's, each ascending
  std::vector<Edge> edges;
};

[[nodiscard]] NetworkGraph build_graph(const IndexCodingProblem& p, std::size_t c);

/// Graphviz text; side-information edges are dashed.
[[nodiscard]] std::string export_dot(const NetworkGraph& g);

/// beta(i, k) is the coefficient of x_{k+1} in broadcast l_{i+1}; row i is
/// therefore codeword g_{i+1}.
struct BetaAssignment {
  BitMatrix coefficients;  // c x n
};

/// eps(j, i) says whether R_{i+1} uses broadcast l_{j+1}. sigma carries the
/// free entries of B_SI, one per side-information edge in side_info_entries
/// order.
struct EpsilonAssignment {
  BitMatrix usage;             // c x n
  std::vector<bool> sigma;     // length sum |K_i|
};

struct TransferDecomposition {
  std::size_t c = 0;
  BetaAssignment beta;
  EpsilonAssignment eps;

  /// All-zero decomposition for the given problem and length.
  static TransferDecomposition zero(const IndexCodingProblem& p, std::size_t c);
};

[[nodiscard]] BitMatrix build_A(const IndexCodingProblem& p, std::size_t c);
[[nodiscard]] BitMatrix build_F(const IndexCodingProblem& p, std::size_t c, const BetaAssignment& beta);
[[nodiscard]] BitMatrix build_B(const IndexCodingProblem& p, std::size_t c, const EpsilonAssignment& eps);

/// Support patterns: 1 wherever the entry may be nonzero for some assignment.
[[nodiscard]] BitMatrix F_pattern(const IndexCodingProblem& p, std::size_t c);
[[nodiscard]] BitMatrix B_pattern(const IndexCodingProblem& p, std::size_t c);

/// M = B * F * A, computed by explicit matrix products.
[[nodiscard]] BitMatrix transfer_matrix(const IndexCodingProblem& p, std::size_t c,
                                        const TransferDecomposition& d);

/// Same product evaluated from the block structure: row i of M is the xor of
/// the codewords R_i uses plus the side-information unit vectors it uses.
[[nodiscard]] BitMatrix transfer_matrix_direct(const IndexCodingProblem& p, const TransferDecomposition& d);

/// The broadcast codewords g_1..g_c.
[[nodiscard]] std::vector<BitVector> encoding_of(const TransferDecomposition& d);

[[nodiscard]] bool is_solution(const IndexCodingProblem& p, std::size_t c, const TransferDecomposition& d);

/// Decomposition realizing the given codewords. For each receiver the
/// unknowns (eps_1..eps_c, sigma_1..sigma_|K_i|) are the lexicographically
/// smallest solution of "row i of M equals e_i"; receivers with no solution
/// get all-zero rows, so is_solution then reports false.
[[nodiscard]] TransferDecomposition decompose_code(const IndexCodingProblem& p,
                                                   const std::vector<BitVector>& codewords);

}  // namespace icopt
