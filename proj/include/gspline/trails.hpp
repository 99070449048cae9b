#ifndef GSPLINE_TRAILS_HPP
#define GSPLINE_TRAILS_HPP

// Constraint paths of a vertex k: the simple paths that leave k, travel only
// through vertices with larger index, and stop at the first vertex with
// smaller index. Their label gcds carry all divisibility information the
// flow-up construction needs; walks continuing past a smaller vertex add
// nothing, because that vertex's value already satisfies its own constraints.

#include "gspline/graph.hpp"

#include <cstddef>
#include <vector>

namespace gspline {

struct ConstraintPath {
  int source;
  int target;                    // first vertex below the source
  std::vector<int> vertices;     // source first, target last
  std::vector<RingElem> labels;  // edge labels in walk order
  RingElem gcd;                  // gcd of the labels, canonical associate
};

inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

// Paths in lexicographic order of their vertex sequences. The search charges
// one unit per expanded node and per emitted path; past `limit` it throws
// PathLimitExceededError. Vertex 1 has no constraint paths.
std::vector<ConstraintPath> constraint_paths(const LabeledGraph& g, int source,
                                             std::size_t limit = kDefaultPathLimit);

// gcd of each constraint path of vertex i, in enumeration order, duplicates
// kept. The smallest leading entry of the i-th flow-up class is their lcm.
std::vector<RingElem> zero_trail_gcds(const LabeledGraph& g, int i,
                                      std::size_t limit = kDefaultPathLimit);

}  // namespace gspline

#endif
