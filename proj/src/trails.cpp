#include "gspline/trails.hpp"

#include "gspline/errors.hpp"

#include <string>
#include <utility>

namespace gspline {

namespace {

class PathSearch {
 public:
  PathSearch(const LabeledGraph& g, int source, std::size_t limit)
      : g_(g), source_(source), limit_(limit), on_stack_(g.vertex_count() + 1, 0) {}

  std::vector<ConstraintPath> run() {
    stack_.push_back(source_);
    on_stack_[source_] = 1;
    visit(source_);
    return std::move(paths_);
  }

 private:
  void charge() {
    if (++work_ > limit_)
      throw PathLimitExceededError("more than " + std::to_string(limit_) +
                                   " constraint paths explored from vertex " +
                                   std::to_string(source_));
  }

  void visit(int v) {
    charge();
    for (auto [w, e] : g_.neighbors(v)) {
      if (w < source_) {
        charge();
        ConstraintPath p;
        p.source = source_;
        p.target = w;
        p.vertices = stack_;
        p.vertices.push_back(w);
        p.labels = labels_;
        p.labels.push_back(g_.edges()[e].label);
        p.gcd = gcd_all(g_.ring(), p.labels);
        paths_.push_back(std::move(p));
      } else if (w > source_ && !on_stack_[w]) {
        on_stack_[w] = 1;
        stack_.push_back(w);
        labels_.push_back(g_.edges()[e].label);
        visit(w);
        labels_.pop_back();
        stack_.pop_back();
        on_stack_[w] = 0;
      }
    }
  }

  const LabeledGraph& g_;
  int source_;
  std::size_t limit_;
  std::size_t work_ = 0;
  std::vector<char> on_stack_;
  std::vector<int> stack_;
  std::vector<RingElem> labels_;
  std::vector<ConstraintPath> paths_;
};

}  // namespace

std::vector<ConstraintPath> constraint_paths(const LabeledGraph& g, int source,
                                             std::size_t limit) {
  if (source < 1 || source > g.vertex_count())
    throw SchemaError("vertex " + std::to_string(source) + " out of range");
  if (source == 1) return {};
  return PathSearch(g, source, limit).run();
}

std::vector<RingElem> zero_trail_gcds(const LabeledGraph& g, int i, std::size_t limit) {
  std::vector<RingElem> gcds;
  for (ConstraintPath& p : constraint_paths(g, i, limit))
    gcds.push_back(std::move(p.gcd));
  return gcds;
}

}  // namespace gspline
