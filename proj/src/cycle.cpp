#include "gspline/cycle.hpp"

#include "gspline/errors.hpp"
#include "gspline/flowup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace gspline {

CycleLayout classify_cycle(const LabeledGraph& g) {
  if (!is_cycle_graph(g))
    throw NotACycleError("graph is not a single cycle");
  int n = g.vertex_count();

  CycleLayout layout;
  layout.order.reserve(n);
  layout.labels.reserve(n);
  int prev = g.neighbors(1)[1].first;  // block the larger neighbor of 1
  int cur = 1;
  for (int step = 0; step < n; ++step) {
    auto nb = g.neighbors(cur);
    int next = nb[0].first == prev ? nb[1].first : nb[0].first;
    layout.order.push_back(cur);
    layout.labels.push_back(g.edge_label(cur, next));
    prev = cur;
    cur = next;
  }

  layout.classification = CycleClass::Ordered;
  for (int p = 0; p < n; ++p)
    if (layout.order[p] != p + 1) {
      layout.classification = CycleClass::ArbitraryOrdered;
      break;
    }
  return layout;
}

namespace {

int position_of(const std::vector<int>& order, int v) {
  return static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
}

// The two-congruence solve for every vertex of a cycle given as order/labels
// with the single zero vertex first in `order`. The vertex names must be
// 1..n with 1 the zero vertex; entry 2 is the leading one.
Spline solve_on_cycle(const std::vector<int>& order,
                      const std::vector<RingElem>& labels, const RingSpec& ring) {
  int n = static_cast<int>(order.size());
  std::vector<int> pos_of(n + 1);
  for (int p = 0; p < n; ++p) pos_of[order[p]] = p;

  Spline f;
  f.values.assign(n, RingElem::zero(ring));
  for (int k = 2; k <= n; ++k) {
    int pos = pos_of[k];
    // Trail gcd and value at the first smaller vertex in one direction.
    auto walk = [&](int dir) {
      RingElem acc = RingElem::zero(ring);
      int p = pos;
      for (;;) {
        int edge = dir > 0 ? p : (p - 1 + n) % n;
        p = (p + dir + n) % n;
        acc = gcd(acc, labels[edge]);
        if (order[p] < k) return std::pair<int, RingElem>(order[p], std::move(acc));
      }
    };
    auto [t_right, p_right] = walk(+1);
    auto [t_left, p_left] = walk(-1);
    f.f(k) = k == 2 ? lcm(p_right, p_left)
                    : cycle_entry_value(f.f(t_right), p_right, f.f(t_left), p_left);
  }
  return f;
}

}  // namespace

ContractedCycle split_contract(const LabeledGraph& g, int i) {
  CycleLayout layout = classify_cycle(g);
  int n = g.vertex_count();
  if (i < 3 || i > n)
    throw DomainError("split/contract handles flow-up indexes 3..n, got " +
                      std::to_string(i));

  int pos = position_of(layout.order, i);
  // Walk outward until the first vertex below i; collect the arc vertices
  // and the labels crossed, both ordered from i outward.
  auto walk = [&](int dir, std::vector<int>& arc, std::vector<RingElem>& crossed) {
    int p = pos;
    for (;;) {
      int edge = dir > 0 ? p : (p - 1 + n) % n;
      p = (p + dir + n) % n;
      crossed.push_back(layout.labels[edge]);
      if (layout.order[p] < i) return;
      arc.push_back(layout.order[p]);
    }
  };
  std::vector<int> arc_left, arc_right;
  std::vector<RingElem> labels_left, labels_right;
  walk(+1, arc_right, labels_right);
  walk(-1, arc_left, labels_left);

  // Surviving arc and its labels, read from the left boundary to the right.
  std::vector<int> arc(arc_left.rbegin(), arc_left.rend());
  arc.push_back(i);
  arc.insert(arc.end(), arc_right.begin(), arc_right.end());
  std::vector<RingElem> labels(labels_left.rbegin(), labels_left.rend());
  labels.insert(labels.end(), labels_right.begin(), labels_right.end());

  if (arc.front() > arc.back()) {
    std::reverse(arc.begin(), arc.end());
    std::reverse(labels.begin(), labels.end());
  }

  ContractedCycle c;
  c.flow_index = i;
  c.original_n = n;
  c.order.push_back(0);
  c.order.insert(c.order.end(), arc.begin(), arc.end());
  c.labels = std::move(labels);
  for (int v = i + 1; v <= n; ++v)
    if (std::find(arc.begin(), arc.end(), v) == arc.end())
      c.forced_zeros.push_back(v);
  return c;
}

RingElem cycle_entry_value(const RingElem& f_r, const RingElem& p_r,
                           const RingElem& f_l, const RingElem& p_l) {
  RingElem d = gcd(p_r, p_l);
  RingElem diff = f_l - f_r;
  if (!divides(d, diff))
    throw IncompatibleSystemError("the two trail congruences have no common solution",
                                  0, 1);
  if (d.is_zero()) return f_r;  // both trails pin the entry, to the same value

  RingElem step = mod_canonical(
      inv_mod(exact_div(p_r, d), exact_div(p_l, d)) * exact_div(diff, d),
      exact_div(p_l, d));
  return mod_canonical(f_r + p_r * step, lcm(p_r, p_l));
}

Spline ordered_cycle_flowup(const LabeledGraph& g, int k) {
  CycleLayout layout = classify_cycle(g);
  if (layout.classification != CycleClass::Ordered)
    throw NotOrderedError("vertex numbering does not follow the cycle");
  int n = g.vertex_count();
  if (k < 1 || k > n)
    throw SchemaError("vertex " + std::to_string(k) + " out of range");

  const RingSpec& ring = g.ring();
  if (k == 1) return trivial_spline(g, RingElem::one(ring));

  // l[j] joins vertices j and j+1 (l[n] closes the cycle); suffix[j] is
  // gcd(l_j, ..., l_n), the gcd of the trail running from j through n to 1.
  const std::vector<RingElem>& l = layout.labels;
  std::vector<RingElem> suffix(n + 2, RingElem::zero(ring));
  for (int j = n; j >= 1; --j) suffix[j] = gcd(l[j - 1], suffix[j + 1]);

  Spline f;
  f.values.assign(n, RingElem::zero(ring));
  f.f(k) = lcm(normalize(l[k - 2]), suffix[k]);
  if (f.f(k).is_zero())
    throw DegenerateFlowUpError("a zero trail forces entry " + std::to_string(k) +
                                " of every flow-up class to vanish");
  for (int j = k + 1; j <= n; ++j)
    f.f(j) = cycle_entry_value(f.f(1), suffix[j], f.f(j - 1), normalize(l[j - 2]));

  if (!is_spline(g, f))
    throw std::logic_error("ordered cycle flow-up violates an edge");
  return f;
}

Spline cycle_flowup(const LabeledGraph& g, int i, CycleMethod method) {
  CycleLayout layout = classify_cycle(g);
  int n = g.vertex_count();
  if (i < 1 || i > n)
    throw SchemaError("vertex " + std::to_string(i) + " out of range");

  if (method == CycleMethod::General) return build_flowup(g, i);
  if (method == CycleMethod::Ordered) return ordered_cycle_flowup(g, i);

  const RingSpec& ring = g.ring();
  if (i == 1) return trivial_spline(g, RingElem::one(ring));
  if (i == 2) {
    Spline f = solve_on_cycle(layout.order, layout.labels, ring);
    if (f.f(2).is_zero())
      throw DegenerateFlowUpError("a zero trail forces entry 2 of every flow-up class to vanish");
    if (!is_spline(g, f))
      throw std::logic_error("cycle flow-up violates an edge");
    return f;
  }

  ContractedCycle c = split_contract(g, i);
  // The merged vertex becomes 1 and the arc keeps its relative order, so the
  // flow index lands at 2 (everything else on the arc is larger).
  std::vector<int> sorted_arc(c.order.begin() + 1, c.order.end());
  std::sort(sorted_arc.begin(), sorted_arc.end());
  std::map<int, int> renumber{{0, 1}};
  for (std::size_t r = 0; r < sorted_arc.size(); ++r)
    renumber[sorted_arc[r]] = static_cast<int>(r) + 2;

  std::vector<int> order;
  for (int v : c.order) order.push_back(renumber[v]);
  Spline sub = solve_on_cycle(order, c.labels, ring);
  if (sub.f(2).is_zero())
    throw DegenerateFlowUpError("a zero trail forces entry " + std::to_string(i) +
                                " of every flow-up class to vanish");

  Spline f;
  f.values.assign(n, RingElem::zero(ring));
  for (int v : sorted_arc) f.f(v) = sub.f(renumber[v]);
  if (!is_spline(g, f))
    throw std::logic_error("cycle flow-up violates an edge");
  return f;
}

}  // namespace gspline
