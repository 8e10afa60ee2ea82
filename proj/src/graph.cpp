#include "twinspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twinspec/error.hpp"

namespace twinspec {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void Graph::check_label(int v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorCode::LabelOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

void Graph::set_edge(int u, int v) {
  adj_[index(u, v)] = 1;
  adj_[index(v, u)] = 1;
  ++edges_;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    const std::string tag = "edge " + std::to_string(u) + "-" + std::to_string(v);
    if (u < 1 || v < 1 || u > n || v > n) {
      throw Error(ErrorCode::InvalidEdge, tag + ": label outside 1.." + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::InvalidEdge, tag + ": loop");
    if (g.adjacent(u, v)) throw Error(ErrorCode::InvalidEdge, tag + ": repeated edge");
    g.set_edge(u, v);
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  check_label(u);
  check_label(v);
  return adj_[index(u, v)] != 0;
}

int Graph::degree(int v) const {
  check_label(v);
  int d = 0;
  for (int w = 1; w <= n_; ++w) d += adj_[index(v, w)];
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (adj_[index(u, v)]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::row(int v) const {
  check_label(v);
  std::vector<int> r(static_cast<std::size_t>(n_));
  for (int w = 1; w <= n_; ++w) r[static_cast<std::size_t>(w - 1)] = adj_[index(v, w)];
  return r;
}

std::string_view to_string(TwinKind kind) noexcept {
  return kind == TwinKind::Duplicate ? "duplicate" : "co-duplicate";
}

void CreationSequence::validate() const {
  if (cells.empty() || cells.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidSequence, "creation sequence needs an even, nonzero number of cells");
  }
  for (int c : cells) {
    if (c < 1) throw Error(ErrorCode::InvalidSequence, "creation sequence cells must be >= 1");
  }
}

int CreationSequence::vertex_count() const { return std::accumulate(cells.begin(), cells.end(), 0); }

CreationSequence CreationSequence::parse(std::string_view text) {
  CreationSequence seq;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw Error(ErrorCode::ParseError, "bad cell '" + std::string(item) + "' in creation sequence");
    }
    seq.cells.push_back(value);
    pos = comma + 1;
  }
  seq.validate();
  return seq;
}

namespace {

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("JSON graph: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::ParseError, "JSON graph must be {\"n\": int, \"edges\": [[int,int],...]}");
  }
  const int n = doc["n"].get<int>();
  if (n < 0) throw Error(ErrorCode::ParseError, "JSON graph: negative n");
  std::vector<Edge> edges;
  std::size_t i = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "JSON graph: edges[" + std::to_string(i) + "] is not a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    ++i;
  }
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared_n = -1;
  int max_label = 0;
  bool seen_edge = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.rfind("n=", 0) == 0) {
      if (seen_edge || declared_n >= 0) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": 'n=' must be the first entry");
      }
      int value = 0;
      const char* b = first.data() + 2;
      const char* e = first.data() + first.size();
      const auto [end, ec] = std::from_chars(b, e, value);
      if (b == e || ec != std::errc{} || end != e || value < 0) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex count '" + first + "'");
      }
      declared_n = value;
      continue;
    }
    std::string second, extra;
    if (!(ls >> second) || (ls >> extra)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two vertex labels");
    }
    auto to_label = [&](const std::string& tok, int column) {
      int value = 0;
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || end != tok.data() + tok.size()) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", field " +
                                               std::to_string(column) + ": '" + tok + "' is not an integer");
      }
      return value;
    };
    const int u = to_label(first, 1);
    const int v = to_label(second, 2);
    max_label = std::max({max_label, u, v});
    edges.emplace_back(u, v);
    seen_edge = true;
  }
  return Graph::from_edges(declared_n >= 0 ? declared_n : max_label, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return parse_json_graph(text);
  return parse_edge_list(text);
}

std::string to_json_string(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

Graph build_nsg(const CreationSequence& seq) {
  seq.validate();
  const int n = seq.vertex_count();
  std::vector<int> cell_of;
  cell_of.reserve(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < seq.cells.size(); ++c) {
    cell_of.insert(cell_of.end(), static_cast<std::size_t>(seq.cells[c]), static_cast<int>(c));
  }
  // Odd (0-based) cells are cliques and are joined to everything before them.
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (cell_of[static_cast<std::size_t>(v - 1)] % 2 == 1) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::SizeMismatch, "relabel order has wrong length");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidArgument, "relabel order is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (g.adjacent(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(j - 1)])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 1 || v > g.order()) {
    throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
  }
  std::vector<Edge> edges;
  auto shift = [v](int w) { return w > v ? w - 1 : w; };
  for (const auto& [a, b] : g.edges()) {
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  }
  return Graph::from_edges(g.order() - 1, edges);
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w = 1; w <= n; ++w) {
      if (!seen[static_cast<std::size_t>(w)] && g.adjacent(u, w)) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

namespace {

/// N(ell) \ {k} == N(k) \ {ell}: rows compared with the pair's columns masked.
bool same_open_neighbourhood(const Graph& g, int ell, int k) {
  for (int w = 1; w <= g.order(); ++w) {
    if (w == ell || w == k) continue;
    if (g.adjacent(ell, w) != g.adjacent(k, w)) return false;
  }
  return true;
}

TwinPair classify(const Graph& g, int ell, int k) {
  const int a = g.adjacent(ell, k) ? 1 : 0;
  return TwinPair{ell, k, a == 1 ? TwinKind::CoDuplicate : TwinKind::Duplicate, a};
}

}  // namespace

TwinPair make_twin_pair(const Graph& g, int ell, int k) {
  for (int v : {ell, k}) {
    if (v < 1 || v > g.order()) {
      throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
    }
  }
  if (ell == k) throw Error(ErrorCode::EqualLabels, "twin pair needs two distinct vertices");
  if (!same_open_neighbourhood(g, ell, k)) {
    throw Error(ErrorCode::NotTwins,
                "vertices " + std::to_string(ell) + " and " + std::to_string(k) + " are not twins");
  }
  return classify(g, ell, k);
}

std::vector<TwinPair> find_twins(const Graph& g) {
  std::vector<TwinPair> out;
  for (int ell = 1; ell <= g.order(); ++ell) {
    for (int k = ell + 1; k <= g.order(); ++k) {
      if (same_open_neighbourhood(g, ell, k)) out.push_back(classify(g, ell, k));
    }
  }
  return out;
}

std::pair<Graph, TwinPair> permute_pair_to_front(const Graph& g, const TwinPair& pair) {
  const TwinPair checked = make_twin_pair(g, pair.ell, pair.k);
  // Equivalent to E_{k',2} E_{ell,1} A E_{ell,1}^T E_{k',2}^T: the pair goes
  // first, everyone else keeps their relative order.
  std::vector<int> order{checked.ell, checked.k};
  for (int v = 1; v <= g.order(); ++v) {
    if (v != checked.ell && v != checked.k) order.push_back(v);
  }
  return {relabel(g, order), TwinPair{1, 2, checked.kind, checked.a}};
}

}  // namespace twinspec
