#ifndef GSPLINE_CYCLE_HPP
#define GSPLINE_CYCLE_HPP

// Cycle-specific machinery. On a cycle every vertex has exactly two
// constraint trails, so each entry of a flow-up class solves a two-congruence
// system with a closed form. For a flow-up index of 3 or more the cycle is
// split at the two nearest smaller-indexed vertices around the index; the
// arc away from it is forced to zero and collapses into a single zero
// vertex, leaving a shorter cycle to solve.

#include "gspline/graph.hpp"

#include <vector>

namespace gspline {

enum class CycleClass { Ordered, ArbitraryOrdered };
enum class CycleMethod { General, Formula, Ordered };

struct CycleLayout {
  std::vector<int> order;        // starts at 1, toward 1's smaller neighbor
  std::vector<RingElem> labels;  // labels[j] between order[j] and order[j+1]
  CycleClass classification;     // Ordered iff order is 1, 2, ..., n
};

// Canonical traversal of a cycle graph. NotACycleError otherwise.
CycleLayout classify_cycle(const LabeledGraph& g);

struct ContractedCycle {
  std::vector<int> order;  // original vertex names; 0 is the merged vertex
  std::vector<RingElem> labels;
  std::vector<int> forced_zeros;  // vertices above the flow index pinned to 0
  int flow_index;
  int original_n;
};

// Splits the cycle for flow-up index i >= 3: walks from i in both directions
// to the nearest smaller-indexed vertex, pins everything beyond them to zero
// and merges it all into vertex 0. The result can be a two-vertex cycle with
// a pair of parallel edges, which is why it is not a LabeledGraph. Oriented
// so that the vertex after 0 is the smaller end of the surviving arc.
ContractedCycle split_contract(const LabeledGraph& g, int i);

// Canonical solution of x = f_r (mod p_r), x = f_l (mod p_l); the closed
// form behind every non-leading entry on a cycle. Zero moduli pin exactly;
// IncompatibleSystemError when the system has no solution.
RingElem cycle_entry_value(const RingElem& f_r, const RingElem& p_r,
                           const RingElem& f_l, const RingElem& p_l);

// Closed form on a cycle whose vertices happen to be numbered in cycle
// order: the leading entry of the k-th class is lcm(l_{k-1}, gcd(l_k..l_n))
// and later entries chain through cycle_entry_value, no path search needed.
// NotOrderedError when the numbering does not follow the cycle.
Spline ordered_cycle_flowup(const LabeledGraph& g, int k);

// Flow-up class on a cycle. General runs the trail construction as on any
// graph; Formula splits and contracts, then applies the two-trail closed
// form; Ordered requires the ordered numbering. All agree where defined.
Spline cycle_flowup(const LabeledGraph& g, int i,
                    CycleMethod method = CycleMethod::Formula);

}  // namespace gspline

#endif
