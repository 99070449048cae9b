#ifndef GSPLINE_TESTUTIL_HPP
#define GSPLINE_TESTUTIL_HPP

#include "gspline/graph.hpp"
#include "gspline/ring.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

using namespace gspline;

inline RingElem zi(long long v) { return RingElem::integer(Int(v)); }

inline Spline zspline(const std::vector<long long>& values) {
  Spline s;
  for (long long v : values) s.values.push_back(zi(v));
  return s;
}

inline std::string graph_json(const std::string& ring, int n,
                              const std::vector<std::tuple<int, int, std::string>>& edges) {
  std::string out = "{\"ring\": \"" + ring + "\", \"vertices\": " + std::to_string(n) +
                    ", \"edges\": [";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v, label] = edges[i];
    if (i) out += ", ";
    out += "{\"u\": " + std::to_string(u) + ", \"v\": " + std::to_string(v) +
           ", \"label\": \"" + label + "\"}";
  }
  return out + "]}";
}

// Path v1 -x- v2 -x+1- v3 over Q[x].
inline std::string fig1_json() {
  return graph_json("Q[x]", 3, {{1, 2, "x"}, {2, 3, "x+1"}});
}

// Contracted square: the merged zero vertex is 1, the surviving vertices of
// the 8-cycle keep their relative order (2, 3, 4).
inline std::string c4_json() {
  return graph_json("Z", 4, {{1, 2, "8"}, {2, 4, "9"}, {3, 4, "6"}, {1, 3, "5"}});
}

// 8-cycle in cyclic order (1,4,8,6,3,5,7,2); contracting it for flow-up
// index 4 yields the square above.
inline std::string c8_json() {
  return graph_json("Z", 8,
                    {{1, 4, "8"},
                     {4, 8, "9"},
                     {6, 8, "6"},
                     {3, 6, "5"},
                     {3, 5, "12"},
                     {5, 7, "4"},
                     {2, 7, "5"},
                     {1, 2, "7"}});
}

// Seven vertices over Q[x]; the label between the two lowest vertices is
// irrelevant to every pinned value and set to 1.
inline std::string poly7_json() {
  return graph_json("Q[x]", 7,
                    {{1, 2, "1"},
                     {1, 3, "x-2"},
                     {1, 4, "x"},
                     {2, 4, "x^2+x"},
                     {3, 4, "x-1"},
                     {4, 5, "x+1"},
                     {5, 6, "x^2-1"},
                     {5, 7, "x+2"},
                     {6, 7, "x^3"}});
}

// Five vertices, seven edges; the constraint paths of vertex 3 walk through
// vertices 4 and 5 in every combination. Labels are distinct primes so each
// path is identifiable by its label sequence.
inline std::string trails5_json() {
  return graph_json("Z", 5,
                    {{1, 2, "2"},
                     {2, 5, "3"},
                     {1, 5, "5"},
                     {1, 4, "7"},
                     {4, 5, "11"},
                     {3, 5, "13"},
                     {3, 4, "17"}});
}

inline LabeledGraph zgraph(int n, const std::vector<std::tuple<int, int, long long>>& edges) {
  std::vector<Edge> es;
  for (auto [u, v, label] : edges) es.push_back({u, v, zi(label)});
  return LabeledGraph(RingSpec::integers(), n, std::move(es));
}

// Cycle visiting 1..n in the given cyclic order; labels[i] sits between
// order[i] and order[i+1] (wrapping).
inline LabeledGraph cycle_graph(const std::vector<int>& order,
                                const std::vector<long long>& labels) {
  std::vector<std::tuple<int, int, long long>> edges;
  int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    edges.push_back({order[i], order[(i + 1) % n], labels[i]});
  return zgraph(n, edges);
}

inline LabeledGraph random_tree(std::mt19937_64& rng, int n, int label_lo, int label_hi) {
  std::uniform_int_distribution<long long> label(label_lo, label_hi);
  std::vector<std::tuple<int, int, long long>> edges;
  for (int v = 2; v <= n; ++v) {
    int u = static_cast<int>(rng() % (v - 1)) + 1;
    edges.push_back({u, v, label(rng)});
  }
  return zgraph(n, edges);
}

inline LabeledGraph random_cycle(std::mt19937_64& rng, int n, int label_lo, int label_hi) {
  std::uniform_int_distribution<long long> label(label_lo, label_hi);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<long long> labels(n);
  for (long long& l : labels) l = label(rng);
  return cycle_graph(order, labels);
}

inline LabeledGraph random_connected(std::mt19937_64& rng, int n, int extra_edges,
                                     int label_lo, int label_hi) {
  std::uniform_int_distribution<long long> label(label_lo, label_hi);
  std::set<std::pair<int, int>> used;
  std::vector<std::tuple<int, int, long long>> edges;
  for (int v = 2; v <= n; ++v) {
    int u = static_cast<int>(rng() % (v - 1)) + 1;
    used.insert({u, v});
    edges.push_back({u, v, label(rng)});
  }
  for (int k = 0; k < extra_edges; ++k) {
    int u = static_cast<int>(rng() % n) + 1;
    int v = static_cast<int>(rng() % n) + 1;
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!used.insert({u, v}).second) continue;
    edges.push_back({u, v, label(rng)});
  }
  return zgraph(n, edges);
}

// Mixed bag used by the randomized acceptance criteria.
inline LabeledGraph random_topology(std::mt19937_64& rng, int max_n, int label_lo, int label_hi) {
  int shape = static_cast<int>(rng() % 3);
  if (shape == 0) {
    int n = 2 + static_cast<int>(rng() % (max_n - 1));
    return random_tree(rng, n, label_lo, label_hi);
  }
  if (shape == 1) {
    int n = 3 + static_cast<int>(rng() % (max_n - 2));
    return random_cycle(rng, n, label_lo, label_hi);
  }
  int n = 2 + static_cast<int>(rng() % (max_n - 1));
  return random_connected(rng, n, 1 + static_cast<int>(rng() % 3), label_lo, label_hi);
}

}  // namespace testutil

#endif
