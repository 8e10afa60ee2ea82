#pragma once

// Simple undirected graphs on vertices 1..n with dense adjacency, nested
// split graphs from compact creation sequences, and twin-vertex detection.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twinspec {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Validates labels (1..n), rejects loops and repeated edges.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return edges_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;
  /// Row v of the adjacency matrix as 0/1 entries, indexed 0..n-1.
  std::vector<int> row(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void set_edge(int u, int v);
  void check_label(int v) const;
  std::size_t index(int u, int v) const noexcept {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
  }

  int n_ = 0;
  int edges_ = 0;
  std::vector<std::uint8_t> adj_;
};

enum class TwinKind { Duplicate, CoDuplicate };

std::string_view to_string(TwinKind kind) noexcept;

struct TwinPair {
  int ell = 0;
  int k = 0;
  TwinKind kind = TwinKind::Duplicate;
  int a = 0;  // adjacency(ell, k)

  /// 0 for duplicates, -1 for co-duplicates.
  int removed_eigenvalue() const noexcept { return kind == TwinKind::Duplicate ? 0 : -1; }

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

struct CreationSequence {
  std::vector<int> cells;

  /// Throws InvalidSequence unless r is even, positive, and every cell ≥ 1.
  void validate() const;
  int vertex_count() const;
  /// "2,2,1,1" style.
  static CreationSequence parse(std::string_view text);
};

/// JSON {"n":..,"edges":[[u,v],..]} or whitespace edge list (optional
/// leading "n=<int>" line). Throws ParseError / InvalidEdge.
Graph parse_graph(std::string_view text);
std::string to_json_string(const Graph& g);

/// (…((K̄a1 ∇ Ka2) ∪ K̄a3) …) ∇ Kar with vertices numbered cell by cell.
Graph build_nsg(const CreationSequence& seq);

Graph complement(const Graph& g);
Graph delete_vertex(const Graph& g, int v);
/// order[i] is the old label placed at new label i+1.
Graph relabel(const Graph& g, const std::vector<int>& order);
bool is_connected(const Graph& g);

/// Classifies (ell, k) or throws NotTwins / LabelOutOfRange / EqualLabels.
TwinPair make_twin_pair(const Graph& g, int ell, int k);
/// All twin pairs (ell < k), lexicographic.
std::vector<TwinPair> find_twins(const Graph& g);

/// Moves ell to label 1 and k to label 2; the other vertices keep their
/// relative order. The returned pair is (1, 2).
std::pair<Graph, TwinPair> permute_pair_to_front(const Graph& g, const TwinPair& pair);

}  // namespace twinspec
