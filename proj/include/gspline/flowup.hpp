#ifndef GSPLINE_FLOWUP_HPP
#define GSPLINE_FLOWUP_HPP

// Flow-up classes: splines whose first i-1 entries vanish and whose i-th
// entry (the leading entry) does not. Over a principal ideal domain the
// leading entries of all flow-up classes with index i form an ideal; its
// generator is the lcm of the zero-trail gcds. Picking each class with that
// smallest leading entry yields a module basis, and the product of the
// leading entries is an invariant of the graph up to units.

#include "gspline/graph.hpp"
#include "gspline/trails.hpp"

#include <cstddef>
#include <vector>

namespace gspline {

// Generator of the ideal of leading entries at index i: 1 for i = 1, else
// the lcm of the constraint-path gcds of vertex i (canonical associate).
// DegenerateFlowUpError when some zero trail forces the entry to vanish.
RingElem smallest_leading_entry(const LabeledGraph& g, int i,
                                std::size_t path_limit = kDefaultPathLimit);

// The flow-up class with index i and smallest leading entry, extended one
// vertex at a time by solving the congruences its constraint paths impose
// against already-placed entries; every entry is the canonical residue.
// DegenerateFlowUpError when no flow-up class with index i exists.
Spline build_flowup(const LabeledGraph& g, int i,
                    std::size_t path_limit = kDefaultPathLimit);

struct FlowUpBasis {
  std::vector<Spline> classes;  // classes[i-1] has leading index i
  RingElem q;                   // product of the leading entries
};

// All n classes; `jobs` worker threads build them independently. The result
// does not depend on the job count.
FlowUpBasis build_basis(const LabeledGraph& g, int jobs = 1,
                        std::size_t path_limit = kDefaultPathLimit);

// Product of the smallest leading entries without building the classes.
RingElem q_element(const LabeledGraph& g, std::size_t path_limit = kDefaultPathLimit);

// Whether the given splines form a flow-up basis: one class per vertex, class
// i zero below its leading index, leading entry a unit multiple of the
// smallest one. Throws NonSplineError if a member violates an edge.
bool is_flowup_basis(const LabeledGraph& g, const std::vector<Spline>& classes,
                     std::size_t path_limit = kDefaultPathLimit);

// Fraction-free (Bareiss) determinant; every division is exact, so this works
// over the coefficient rings directly. Empty matrix -> 1.
RingElem exact_determinant(const RingSpec& ring,
                           std::vector<std::vector<RingElem>> m);

// Determinant test: |det| of the class matrix equals the leading-entry
// product. Equivalent to is_flowup_basis on cycles, trees and the diamond;
// callers should consult determinant_family_covered before relying on it.
bool determinant_criterion(const LabeledGraph& g, const std::vector<Spline>& classes,
                           std::size_t path_limit = kDefaultPathLimit);
bool determinant_family_covered(const LabeledGraph& g);

// Basis coordinates of s: s == sum coefficients[i] * classes[i]. Forward
// substitution; each step divides exactly. InexactDivisionError when s is not
// a spline on the basis's graph.
std::vector<RingElem> decompose(const FlowUpBasis& basis, const Spline& s);

}  // namespace gspline

#endif
