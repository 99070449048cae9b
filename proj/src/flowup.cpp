#include "gspline/flowup.hpp"

#include "gspline/errors.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace gspline {

RingElem smallest_leading_entry(const LabeledGraph& g, int i, std::size_t path_limit) {
  if (i == 1) return RingElem::one(g.ring());
  std::vector<RingElem> gcds = zero_trail_gcds(g, i, path_limit);
  RingElem lead = lcm_all(g.ring(), gcds);
  if (lead.is_zero())
    throw DegenerateFlowUpError("a zero trail forces entry " + std::to_string(i) +
                                " of every flow-up class to vanish");
  return lead;
}

Spline build_flowup(const LabeledGraph& g, int i, std::size_t path_limit) {
  const RingSpec& ring = g.ring();
  int n = g.vertex_count();
  if (i == 1) return trivial_spline(g, RingElem::one(ring));

  RingElem lead = smallest_leading_entry(g, i, path_limit);
  Spline f;
  f.values.assign(n, RingElem::zero(ring));
  f.f(i) = lead;

  for (int k = i + 1; k <= n; ++k) {
    // One congruence per already-placed target: f_k = f_t modulo the lcm of
    // the gcds of the constraint paths from k to t.
    std::map<int, std::vector<RingElem>> per_target;
    for (ConstraintPath& p : constraint_paths(g, k, path_limit))
      per_target[p.target].push_back(std::move(p.gcd));

    CongruenceSystem system(ring);
    for (auto& [target, gcds] : per_target)
      system.add(f.f(target), lcm_all(ring, gcds));
    f.f(k) = crt_solve(system);
  }

  if (!is_spline(g, f))
    throw std::logic_error("constructed flow-up class violates an edge");
  return f;
}

FlowUpBasis build_basis(const LabeledGraph& g, int jobs, std::size_t path_limit) {
  int n = g.vertex_count();
  FlowUpBasis basis;
  basis.classes.assign(n, Spline{});

  if (jobs > n) jobs = n;
  if (jobs <= 1) {
    for (int i = 1; i <= n; ++i) basis.classes[i - 1] = build_flowup(g, i, path_limit);
  } else {
    std::vector<std::exception_ptr> errors(n);
    std::atomic<int> next{1};
    auto worker = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i > n) return;
        try {
          basis.classes[i - 1] = build_flowup(g, i, path_limit);
        } catch (...) {
          errors[i - 1] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  basis.q = RingElem::one(g.ring());
  for (int i = 1; i <= n; ++i) basis.q = basis.q * basis.classes[i - 1].f(i);
  return basis;
}

RingElem q_element(const LabeledGraph& g, std::size_t path_limit) {
  RingElem q = RingElem::one(g.ring());
  for (int i = 1; i <= g.vertex_count(); ++i)
    q = q * smallest_leading_entry(g, i, path_limit);
  return q;
}

bool is_flowup_basis(const LabeledGraph& g, const std::vector<Spline>& classes,
                     std::size_t path_limit) {
  int n = g.vertex_count();
  if (static_cast<int>(classes.size()) != n) return false;

  for (int i = 1; i <= n; ++i) {
    const Spline& c = classes[i - 1];
    if (c.size() != n)
      throw LengthMismatchError("class " + std::to_string(i) + " has " +
                                std::to_string(c.size()) + " entries, expected " +
                                std::to_string(n));
    SplineCheck chk = check_spline(g, c);
    if (!chk.ok)
      throw NonSplineError("class " + std::to_string(i) + " violates edge (" +
                               std::to_string(chk.violations[0].first) + ", " +
                               std::to_string(chk.violations[0].second) + ")",
                           static_cast<std::size_t>(i - 1), chk.violations[0]);
    for (int j = 1; j < i; ++j)
      if (!c.f(j).is_zero()) return false;
    if (c.f(i).is_zero()) return false;
    if (normalize(c.f(i)) != smallest_leading_entry(g, i, path_limit)) return false;
  }
  return true;
}

RingElem exact_determinant(const RingSpec& ring, std::vector<std::vector<RingElem>> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw LengthMismatchError("determinant needs a square matrix");
  if (n == 0) return RingElem::one(ring);

  // Bareiss elimination: every 2x2-minor division by the previous pivot is
  // exact over an integral domain, and m[n-1][n-1] ends up as the determinant.
  bool negate = false;
  RingElem prev = RingElem::one(ring);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return RingElem::zero(ring);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c)
        m[r][c] = exact_div(m[k][k] * m[r][c] - m[r][k] * m[k][c], prev);
      m[r][k] = RingElem::zero(ring);
    }
    prev = m[k][k];
  }
  RingElem det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

bool determinant_criterion(const LabeledGraph& g, const std::vector<Spline>& classes,
                           std::size_t path_limit) {
  int n = g.vertex_count();
  if (static_cast<int>(classes.size()) != n) return false;
  std::vector<std::vector<RingElem>> m;
  for (const Spline& c : classes) {
    if (c.size() != n)
      throw LengthMismatchError("class matrix is not square");
    m.push_back(c.values);
  }
  RingElem det = exact_determinant(g.ring(), std::move(m));
  if (det.is_zero()) return false;
  return normalize(det) == q_element(g, path_limit);
}

bool determinant_family_covered(const LabeledGraph& g) {
  return is_cycle_graph(g) || is_tree(g) || is_diamond(g);
}

std::vector<RingElem> decompose(const FlowUpBasis& basis, const Spline& s) {
  int n = static_cast<int>(basis.classes.size());
  if (s.size() != n)
    throw LengthMismatchError("labeling has " + std::to_string(s.size()) +
                              " entries, basis has " + std::to_string(n) + " classes");

  Spline residual = s;
  std::vector<RingElem> coefficients;
  for (int i = 1; i <= n; ++i) {
    RingElem c = exact_div(residual.f(i), basis.classes[i - 1].f(i));
    residual = residual - (c * basis.classes[i - 1]);
    coefficients.push_back(std::move(c));
  }
  for (const RingElem& r : residual.values)
    if (!r.is_zero())
      throw InexactDivisionError("labeling is outside the span of the basis");
  return coefficients;
}

}  // namespace gspline
