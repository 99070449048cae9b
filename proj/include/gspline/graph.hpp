#ifndef GSPLINE_GRAPH_HPP
#define GSPLINE_GRAPH_HPP

// Finite simple connected graphs with vertices 1..n and one ring element per
// edge, plus vertex labelings (splines). A labeling F is a spline when for
// every edge uv the label divides f_u - f_v; a zero label therefore forces
// equality and a unit label imposes nothing.

#include "gspline/ring.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gspline {

struct Edge {
  int u, v;  // stored with u < v
  RingElem label;
};

class LabeledGraph {
 public:
  // Validates: vertex range, no self-loops, no duplicate edges, one ring,
  // connectivity. Edges are kept canonically sorted so downstream results do
  // not depend on the input file's edge order.
  LabeledGraph(RingSpec ring, int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const RingSpec& ring() const { return ring_; }
  std::span<const Edge> edges() const { return edges_; }

  // (neighbor, edge index) pairs sorted by neighbor index.
  std::span<const std::pair<int, int>> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;
  const RingElem& edge_label(int u, int v) const;

 private:
  RingSpec ring_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// JSON document {"ring": ..., "vertices": n, "edges": [{"u","v","label"}...]}.
LabeledGraph load_graph(const std::string& json_text);
std::string save_graph(const LabeledGraph& g);

// Vertex labeling; values[i-1] is the entry at vertex i.
struct Spline {
  std::vector<RingElem> values;

  const RingElem& f(int vertex) const { return values[vertex - 1]; }
  RingElem& f(int vertex) { return values[vertex - 1]; }
  int size() const { return static_cast<int>(values.size()); }

  friend bool operator==(const Spline& a, const Spline& b) { return a.values == b.values; }
};

Spline operator+(const Spline& a, const Spline& b);
Spline operator-(const Spline& a, const Spline& b);
Spline operator*(const RingElem& c, const Spline& s);

// JSON document {"values": ["...", ...]}, entry for vertex 1 first.
Spline load_spline(const LabeledGraph& g, const std::string& json_text);
std::string save_spline(const Spline& s);

struct SplineCheck {
  bool ok;
  std::vector<std::pair<int, int>> violations;  // offending edges, canonical order
};

// Divisibility check on every edge; collects all violations.
SplineCheck check_spline(const LabeledGraph& g, const Spline& s);
bool is_spline(const LabeledGraph& g, const Spline& s);

// The constant labeling (r, r, ..., r); a spline on any graph.
Spline trivial_spline(const LabeledGraph& g, const RingElem& r);

// Shape predicates used by the determinant criterion's scope check.
bool is_tree(const LabeledGraph& g);
bool is_cycle_graph(const LabeledGraph& g);
bool is_diamond(const LabeledGraph& g);  // complete graph on 4 vertices minus one edge

}  // namespace gspline

#endif
