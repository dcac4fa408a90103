#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "srpk/closure.hpp"
#include "srpk/error.hpp"
#include "srpk/matrix.hpp"
#include "srpk/matrix_io.hpp"
#include "srpk/solve.hpp"

namespace srpk {

template <Semiring S>
struct Arc {
  std::size_t from;
  std::size_t to;
  element_t<S> weight;

  bool operator==(const Arc&) const = default;
};

/// Digraph on nodes 0..n-1 with at most one arc per ordered pair. Adding an
/// arc that already exists combines the weights with the semiring sum; arcs
/// of weight zero are not stored.
template <Semiring S>
class WeightedDigraph {
 public:
  WeightedDigraph(S s, std::size_t n) : weights_(std::move(s), n, n) {}

  explicit WeightedDigraph(Matrix<S> weights) : weights_(std::move(weights)) {
    detail::require_square(weights_, "WeightedDigraph");
  }

  const S& semiring() const { return weights_.semiring(); }
  std::size_t node_count() const { return weights_.rows(); }

  void add_arc(std::size_t from, std::size_t to, const element_t<S>& w) {
    if (from >= node_count() || to >= node_count()) {
      raise(ErrorKind::shape_mismatch, "arc (" + std::to_string(from + 1) + ", " + std::to_string(to + 1) +
                                           ") outside a graph of " + std::to_string(node_count()) + " nodes");
    }
    weights_(from, to) = semiring().add(weights_(from, to), w);
  }

  /// Arcs in row-major order of (from, to).
  std::vector<Arc<S>> arcs() const {
    std::vector<Arc<S>> out;
    const auto zero = semiring().zero();
    for (std::size_t i = 0; i < node_count(); ++i)
      for (std::size_t j = 0; j < node_count(); ++j)
        if (!(weights_(i, j) == zero)) out.push_back({i, j, weights_(i, j)});
    return out;
  }

  const Matrix<S>& weights() const { return weights_; }

 private:
  Matrix<S> weights_;
};

template <Semiring S>
Matrix<S> graph_to_matrix(const WeightedDigraph<S>& g) {
  return g.weights();
}

template <Semiring S>
WeightedDigraph<S> matrix_to_graph(const Matrix<S>& a) {
  return WeightedDigraph<S>(a);
}

namespace io {

/// Edge list: a line `n m`, then m lines `i j w` with 1-based node indices.
template <Semiring S>
WeightedDigraph<S> read_edge_list(const S& s, std::istream& in) {
  auto [n, m] = detail::read_header(in, "edge list");
  WeightedDigraph<S> g(s, n);
  std::string line;
  for (std::size_t e = 0; e < m; ++e) {
    if (!detail::next_content_line(in, line)) {
      raise(ErrorKind::parse_error, "edge list ends after " + std::to_string(e) + " of " +
                                        std::to_string(m) + " arcs");
    }
    auto toks = detail::split_tokens(line);
    if (toks.size() != 3) raise(ErrorKind::parse_error, "arc line needs 'i j w': '" + line + "'");
    std::size_t i = detail::parse_count(toks[0], "node index");
    std::size_t j = detail::parse_count(toks[1], "node index");
    if (i < 1 || i > n || j < 1 || j > n) {
      raise(ErrorKind::parse_error, "node index out of range 1.." + std::to_string(n) + ": '" + line + "'");
    }
    g.add_arc(i - 1, j - 1, s.parse(toks[2]));
  }
  detail::expect_end(in, "edge list");
  return g;
}

template <Semiring S>
WeightedDigraph<S> read_edge_list(const S& s, const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(s, in);
}

}  // namespace io

/// All-pairs path sums: entry (i, j) of A* for the graph's matrix A.
template <Semiring S>
Matrix<S> algebraic_path(const WeightedDigraph<S>& g, Method method = Method::gauss_jordan) {
  return closure(graph_to_matrix(g), method);
}

/// A* b: best value from each node, counting the terminal profit b_k for
/// leaving the graph at node k.
template <Semiring S>
Vector<S> best_profit(const WeightedDigraph<S>& g, std::span<const element_t<S>> terminal,
                      Method method = Method::gauss_jordan) {
  return solve_bellman(graph_to_matrix(g), terminal, method);
}

template <Semiring S>
struct PathResult {
  element_t<S> value;
  // Visited nodes from source to target; a single node for the length-0 path.
  std::vector<std::size_t> nodes;
};

/// Product of arc weights along `nodes` under the matrix `a`; the length-0
/// path weighs one.
template <Semiring S>
element_t<S> path_weight(const Matrix<S>& a, const std::vector<std::size_t>& nodes) {
  const S& s = a.semiring();
  auto w = s.one();
  for (std::size_t k = 1; k < nodes.size(); ++k) w = s.mul(w, a(nodes[k - 1], nodes[k]));
  return w;
}

namespace detail {

// Path i -> j (i != j) realising entry (i, j) as it stood before pivot
// `before` was eliminated.
template <Semiring S>
void unwind(const LinkedClosure<S>& c, std::size_t i, std::size_t j, std::size_t before,
            std::vector<std::size_t>& out) {
  auto p = c.links.link_before(i, j, before);
  if (!p) {
    if (c.original(i, j) == c.original.semiring().zero()) {
      raise(ErrorKind::no_path, "no arc from " + std::to_string(i + 1) + " to " + std::to_string(j + 1));
    }
    out.push_back(j);
    return;
  }
  unwind(c, i, *p, *p, out);
  unwind(c, *p, j, *p, out);
}

}  // namespace detail

/// One optimal path from i to j (0-based) following the parental links. The
/// weight of the returned path, recomputed from the original arcs, always
/// equals the closure entry; otherwise NoPath is raised.
template <IdempotentSemiring S>
PathResult<S> reconstruct_path(const LinkedClosure<S>& c, std::size_t i, std::size_t j) {
  const S& s = c.closure.semiring();
  const std::size_t n = c.closure.rows();
  if (i >= n || j >= n) {
    raise(ErrorKind::shape_mismatch, "node pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                         ") outside a graph of " + std::to_string(n) + " nodes");
  }
  const auto value = c.closure(i, j);
  const std::string pair = "from " + std::to_string(i + 1) + " to " + std::to_string(j + 1);
  if (value == s.zero()) raise(ErrorKind::no_path, "no path " + pair);

  PathResult<S> result{value, {i}};
  if (i != j) detail::unwind(c, i, j, n, result.nodes);
  if (!(path_weight(c.original, result.nodes) == value)) {
    raise(ErrorKind::no_path, "no optimal finite path " + pair + " (closure value " + s.format(value) + ")");
  }
  return result;
}

}  // namespace srpk
