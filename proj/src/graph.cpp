#include "gspline/graph.hpp"

#include "gspline/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace gspline {

using nlohmann::ordered_json;

LabeledGraph::LabeledGraph(RingSpec ring, int vertex_count, std::vector<Edge> edges)
    : ring_(std::move(ring)), n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw SchemaError("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_)
      throw SchemaError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") out of vertex range 1.." + std::to_string(n_));
    if (e.u == e.v)
      throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
    if (!seen.insert({e.u, e.v}).second)
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ")");
    if (e.label.ring() != ring_)
      throw MixedRingError("edge label ring does not match the graph ring");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

  adjacency_.assign(n_ + 1, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].u].push_back({edges_[i].v, static_cast<int>(i)});
    adjacency_[edges_[i].v].push_back({edges_[i].u, static_cast<int>(i)});
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  // connectivity
  std::vector<char> reached(n_ + 1, 0);
  std::vector<int> stack = {1};
  reached[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (auto [w, idx] : adjacency_[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (count != n_) throw DisconnectedError("graph is not connected");
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (auto [w, idx] : adjacency_[u])
    if (w == v) return true;
  return false;
}

const RingElem& LabeledGraph::edge_label(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (auto [w, idx] : adjacency_[u])
    if (w == v) return edges_[idx].label;
  throw DomainError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

namespace {

ordered_json parse_document(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("invalid JSON document");
  return doc;
}

}  // namespace

LabeledGraph load_graph(const std::string& json_text) {
  ordered_json doc = parse_document(json_text);
  if (!doc.is_object() || !doc.contains("ring") || !doc.contains("vertices") ||
      !doc.contains("edges"))
    throw SchemaError("graph document needs \"ring\", \"vertices\" and \"edges\"");
  if (!doc["ring"].is_string()) throw SchemaError("\"ring\" must be a string");
  if (!doc["vertices"].is_number_integer()) throw SchemaError("\"vertices\" must be an integer");
  if (!doc["edges"].is_array()) throw SchemaError("\"edges\" must be an array");

  RingSpec ring = RingSpec::parse(doc["ring"].get<std::string>());
  int n = doc["vertices"].get<int>();
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_object() || !item.contains("u") || !item.contains("v") ||
        !item.contains("label"))
      throw SchemaError("each edge needs \"u\", \"v\" and \"label\"");
    if (!item["u"].is_number_integer() || !item["v"].is_number_integer())
      throw SchemaError("edge endpoints must be integers");
    if (!item["label"].is_string()) throw SchemaError("edge label must be a string");
    edges.push_back(
        {item["u"].get<int>(), item["v"].get<int>(),
         parse_elem(ring, item["label"].get<std::string>())});
  }
  return LabeledGraph(std::move(ring), n, std::move(edges));
}

std::string save_graph(const LabeledGraph& g) {
  ordered_json doc;
  doc["ring"] = g.ring().to_string();
  doc["vertices"] = g.vertex_count();
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) {
    ordered_json edge;
    edge["u"] = e.u;
    edge["v"] = e.v;
    edge["label"] = print_elem(e.label);
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump();
}

Spline operator+(const Spline& a, const Spline& b) {
  if (a.size() != b.size()) throw LengthMismatchError("spline lengths differ");
  Spline out;
  out.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(a.values[i] + b.values[i]);
  return out;
}

Spline operator-(const Spline& a, const Spline& b) {
  if (a.size() != b.size()) throw LengthMismatchError("spline lengths differ");
  Spline out;
  out.values.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.values.push_back(a.values[i] - b.values[i]);
  return out;
}

Spline operator*(const RingElem& c, const Spline& s) {
  Spline out;
  out.values.reserve(s.values.size());
  for (const RingElem& v : s.values) out.values.push_back(c * v);
  return out;
}

Spline load_spline(const LabeledGraph& g, const std::string& json_text) {
  ordered_json doc = parse_document(json_text);
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array())
    throw SchemaError("spline document needs a \"values\" array");
  Spline s;
  for (const auto& item : doc["values"]) {
    if (!item.is_string()) throw SchemaError("spline values must be strings");
    s.values.push_back(parse_elem(g.ring(), item.get<std::string>()));
  }
  if (s.size() != g.vertex_count())
    throw LengthMismatchError("spline has " + std::to_string(s.size()) + " values, graph has " +
                              std::to_string(g.vertex_count()) + " vertices");
  return s;
}

std::string save_spline(const Spline& s) {
  ordered_json doc;
  doc["values"] = ordered_json::array();
  for (const RingElem& v : s.values) doc["values"].push_back(print_elem(v));
  return doc.dump();
}

SplineCheck check_spline(const LabeledGraph& g, const Spline& s) {
  if (s.size() != g.vertex_count())
    throw LengthMismatchError("spline length does not match the vertex count");
  SplineCheck result{true, {}};
  for (const Edge& e : g.edges()) {
    if (!divides(e.label, s.f(e.u) - s.f(e.v))) {
      result.ok = false;
      result.violations.push_back({e.u, e.v});
    }
  }
  return result;
}

bool is_spline(const LabeledGraph& g, const Spline& s) { return check_spline(g, s).ok; }

Spline trivial_spline(const LabeledGraph& g, const RingElem& r) {
  Spline s;
  s.values.assign(g.vertex_count(), r);
  return s;
}

bool is_tree(const LabeledGraph& g) {
  return static_cast<int>(g.edges().size()) == g.vertex_count() - 1;
}

bool is_cycle_graph(const LabeledGraph& g) {
  if (g.vertex_count() < 3) return false;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_diamond(const LabeledGraph& g) {
  if (g.vertex_count() != 4 || g.edges().size() != 5) return false;
  std::vector<int> degrees;
  for (int v = 1; v <= 4; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees == std::vector<int>{2, 2, 3, 3};
}

}  // namespace gspline
