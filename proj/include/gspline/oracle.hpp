#ifndef GSPLINE_ORACLE_HPP
#define GSPLINE_ORACLE_HPP

// Brute-force cross-checks for the trail-based algorithms. Everything here
// avoids the trail theory: splines are found by exhaustive search over
// residues, and the only facts used are elementary (sums and multiples of
// splines are splines; vertices joined by a zero label carry equal values).
// The searches run over the integers; modulus arithmetic stays in 64 bits.

#include "gspline/graph.hpp"

#include <cstddef>
#include <vector>

namespace gspline {

// lcm of the absolute values of the nonzero edge labels (1 if none). Every
// entry constraint lives modulo a divisor of this.
Int default_modulus(const LabeledGraph& g);

// All labelings with entries in [0, m) satisfying every edge constraint
// modulo m. When every label divides m (the default), these are exactly the
// splines whose entries lie in [0, m). modulus 0 means the default.
// SearchSpaceTooLargeError when m^n exceeds space_limit.
std::vector<Spline> enumerate_splines_mod(const LabeledGraph& g, const Int& modulus = Int(0),
                                          std::size_t space_limit = 10'000'000);

// Number of labelings enumerate_splines_mod would return, counted by a
// pruned search that never materializes them; node_limit caps the search
// tree (SearchSpaceTooLargeError).
Int count_splines_mod(const LabeledGraph& g, const Int& modulus = Int(0),
                      std::size_t node_limit = 50'000'000);

// Smallest nonzero value of entry i over splines vanishing below i, found by
// trying candidate values in ascending order, each followed by an exhaustive
// extension search. Vertices joined by zero labels are merged first;
// NoFlowUpFoundError when that pins entry i to an earlier vertex.
RingElem oracle_min_leading_entry(const LabeledGraph& g, int i,
                                  std::size_t node_limit = 10'000'000);

// One constraint per edge-distinct walk from `source` standing on a smaller
// vertex: the walk forces f_source = f_target modulo the gcd of the labels
// walked. The unpruned family the constraint paths claim to replace.
struct TrailConstraint {
  int target;
  RingElem gcd;
};
std::vector<TrailConstraint> all_trail_constraints(const LabeledGraph& g, int source,
                                                   std::size_t limit = 1'000'000);

}  // namespace gspline

#endif
