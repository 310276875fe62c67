#include "icopt/netcode.hpp"

#include <sstream>
#include <stdexcept>

namespace icopt {

namespace {

std::size_t y_length(const IndexCodingProblem& p, std::size_t c) { return p.n() * c + side_info_total(p); }

void require_length(std::size_t c) {
  if (c == 0) {
    throw std::invalid_argument("code length must be at least 1");
  }
}

void require_shape(const BitMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(std::string(what) + " has the wrong shape");
  }
}

}  // namespace

std::string Vertex::name() const {
  switch (kind) {
    case VertexKind::kSource:
      return "x" + std::to_string(index);
    case VertexKind::kBroadcast:
      return "l" + std::to_string(index);
    case VertexKind::kRelay:
      return "lp" + std::to_string(index);
    case VertexKind::kReceiver:
      return "R" + std::to_string(index);
  }
  return {};
}

NetworkGraph build_graph(const IndexCodingProblem& p, std::size_t c) {
  require_length(c);
  NetworkGraph g;
  g.n = p.n();
  g.c = c;
  for (std::size_t k = 1; k <= p.n(); ++k) g.vertices.push_back({VertexKind::kSource, k});
  for (std::size_t i = 1; i <= c; ++i) g.vertices.push_back({VertexKind::kBroadcast, i});
  for (std::size_t i = 1; i <= c; ++i) g.vertices.push_back({VertexKind::kRelay, i});
  for (std::size_t r = 1; r <= p.n(); ++r) g.vertices.push_back({VertexKind::kReceiver, r});

  for (std::size_t k = 1; k <= p.n(); ++k) {
    for (std::size_t i = 1; i <= c; ++i) {
      g.edges.push_back({{VertexKind::kSource, k}, {VertexKind::kBroadcast, i}, EdgeKind::kSourceToBroadcast});
    }
  }
  for (std::size_t i = 1; i <= c; ++i) {
    g.edges.push_back({{VertexKind::kBroadcast, i}, {VertexKind::kRelay, i}, EdgeKind::kBroadcast});
  }
  for (std::size_t i = 1; i <= c; ++i) {
    for (std::size_t r = 1; r <= p.n(); ++r) {
      g.edges.push_back({{VertexKind::kRelay, i}, {VertexKind::kReceiver, r}, EdgeKind::kDelivery});
    }
  }
  for (const auto& e : side_info_entries(p)) {
    g.edges.push_back({{VertexKind::kSource, e.message}, {VertexKind::kReceiver, e.receiver}, EdgeKind::kSideInfo});
  }
  return g;
}

std::string export_dot(const NetworkGraph& g) {
  std::ostringstream out;
  out << "digraph index_code {\n";
  out << "  rankdir=TB;\n";
  for (const auto& v : g.vertices) {
    out << "  " << v.name();
    if (v.kind == VertexKind::kRelay) {
      out << " [label=\"l'" << v.index << "\"]";
    }
    out << ";\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << e.tail.name() << " -> " << e.head.name();
    if (e.kind == EdgeKind::kSideInfo) {
      out << " [style=dashed]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

TransferDecomposition TransferDecomposition::zero(const IndexCodingProblem& p, std::size_t c) {
  require_length(c);
  TransferDecomposition d;
  d.c = c;
  d.beta.coefficients = BitMatrix(c, p.n());
  d.eps.usage = BitMatrix(c, p.n());
  d.eps.sigma.assign(side_info_total(p), false);
  return d;
}

BitMatrix build_A(const IndexCodingProblem& p, std::size_t c) {
  require_length(c);
  const std::size_t n = p.n();
  BitMatrix a(y_length(p, c), n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < c; ++i) {
      a.set(k * c + i, k);
    }
  }
  std::size_t row = n * c;
  for (const auto& e : side_info_entries(p)) {
    a.set(row++, e.message - 1);
  }
  return a;
}

BitMatrix build_F(const IndexCodingProblem& p, std::size_t c, const BetaAssignment& beta) {
  require_length(c);
  const std::size_t n = p.n();
  require_shape(beta.coefficients, c, n, "beta assignment");
  const std::size_t order = y_length(p, c);
  BitMatrix f(order, order);
  // Block j holds n identical rows; beta(x_k, l_j) sits at column (k-1)c + j.
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        if (beta.coefficients.get(j, k)) {
          f.set(j * n + r, k * c + j);
        }
      }
    }
  }
  for (std::size_t s = n * c; s < order; ++s) {
    f.set(s, s);
  }
  return f;
}

BitMatrix build_B(const IndexCodingProblem& p, std::size_t c, const EpsilonAssignment& eps) {
  require_length(c);
  const std::size_t n = p.n();
  require_shape(eps.usage, c, n, "epsilon assignment");
  const auto entries = side_info_entries(p);
  if (eps.sigma.size() != entries.size()) {
    throw std::invalid_argument("epsilon assignment has the wrong number of side-information entries");
  }
  BitMatrix b(n, y_length(p, c));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (eps.usage.get(j, i)) {
        b.set(i, j * n + i);
      }
    }
  }
  for (std::size_t s = 0; s < entries.size(); ++s) {
    if (eps.sigma[s]) {
      b.set(entries[s].receiver - 1, n * c + s);
    }
  }
  return b;
}

BitMatrix F_pattern(const IndexCodingProblem& p, std::size_t c) {
  BetaAssignment all{BitMatrix(c, p.n())};
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t k = 0; k < p.n(); ++k) {
      all.coefficients.set(j, k);
    }
  }
  return build_F(p, c, all);
}

BitMatrix B_pattern(const IndexCodingProblem& p, std::size_t c) {
  EpsilonAssignment all{BitMatrix(c, p.n()), std::vector<bool>(side_info_total(p), true)};
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < p.n(); ++i) {
      all.usage.set(j, i);
    }
  }
  return build_B(p, c, all);
}

BitMatrix transfer_matrix(const IndexCodingProblem& p, std::size_t c, const TransferDecomposition& d) {
  if (d.c != c) {
    throw std::invalid_argument("decomposition length differs from requested length");
  }
  return build_B(p, c, d.eps) * build_F(p, c, d.beta) * build_A(p, c);
}

BitMatrix transfer_matrix_direct(const IndexCodingProblem& p, const TransferDecomposition& d) {
  const std::size_t n = p.n();
  BitMatrix m(n, n);
  std::size_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BitVector& row = m.row(i);
    for (std::size_t j = 0; j < d.c; ++j) {
      if (d.eps.usage.get(j, i)) {
        row ^= d.beta.coefficients.row(j);
      }
    }
    for (const auto k : p.knows(i + 1)) {
      if (d.eps.sigma[s++]) {
        row.flip(k - 1);
      }
    }
  }
  return m;
}

std::vector<BitVector> encoding_of(const TransferDecomposition& d) { return d.beta.coefficients.row_vectors(); }

bool is_solution(const IndexCodingProblem& p, std::size_t c, const TransferDecomposition& d) {
  return transfer_matrix(p, c, d) == BitMatrix::identity(p.n());
}

TransferDecomposition decompose_code(const IndexCodingProblem& p, const std::vector<BitVector>& codewords) {
  if (codewords.empty()) {
    throw std::invalid_argument("a code needs at least one codeword");
  }
  const std::size_t n = p.n();
  const std::size_t c = codewords.size();
  auto d = TransferDecomposition::zero(p, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (codewords[j].size() != n) {
      throw std::invalid_argument("codeword length differs from the message count");
    }
    d.beta.coefficients.row(j) = codewords[j];
  }

  std::size_t sigma_offset = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& known = p.knows(i);
    const std::size_t unknowns = c + known.size();
    // Columns are stored in reverse order so that, after elimination, every
    // pivot unknown depends only on lower-indexed free unknowns; zeroing the
    // free ones then yields the lexicographically smallest solution.
    BitMatrix aug(n, unknowns + 1);
    auto column_of = [&](std::size_t u) { return unknowns - 1 - u; };
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t j = 0; j < c; ++j) {
        if (codewords[j].get(row)) aug.set(row, column_of(j));
      }
      for (std::size_t t = 0; t < known.size(); ++t) {
        if (known[t] - 1 == row) aug.set(row, column_of(c + t));
      }
    }
    aug.set(i - 1, unknowns);
    const auto ech = rref(aug);
    const bool consistent = ech.pivots.empty() || ech.pivots.back() != unknowns;
    if (consistent) {
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        if (!ech.matrix.get(r, unknowns)) continue;
        const std::size_t u = unknowns - 1 - ech.pivots[r];
        if (u < c) {
          d.eps.usage.set(u, i - 1);
        } else {
          d.eps.sigma[sigma_offset + (u - c)] = true;
        }
      }
    }
    sigma_offset += known.size();
  }
  return d;
}

}  // namespace icopt
