#include "gspline/oracle.hpp"

#include "gspline/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

namespace gspline {

namespace {

void require_integers(const LabeledGraph& g, const char* what) {
  if (g.ring() != RingSpec::integers())
    throw DomainError(std::string(what) + " requires the ring Z");
}

long long to_search_width(const Int& m) {
  if (m > Int(1'000'000'000'000LL))
    throw SearchSpaceTooLargeError("modulus " + m.str() + " is too large to search");
  return static_cast<long long>(m);
}

long long ll_gcd(long long a, long long b) { return std::gcd(a, b); }

// x = r (mod m) with 1 <= m; merging keeps r canonical in [0, m).
struct Cong {
  long long r = 0;
  long long m = 1;
};

// Intersect with x = r2 (mod m2); false when the classes are disjoint.
bool merge(Cong& a, long long r2, long long m2) {
  long long g = ll_gcd(a.m, m2);
  if ((r2 - a.r) % g != 0) return false;
  long long lcm = a.m / g * m2;
  // Walk a.r forward by multiples of a.m into the class of r2 mod m2.
  long long t = (r2 - a.r) / g;
  long long m2g = m2 / g;
  // Inverse of a.m/g modulo m2/g by the extended Euclid loop.
  long long inv = 1, x0 = 0, x1 = 1, aa = (a.m / g) % m2g, bb = m2g;
  if (bb == 1) {
    inv = 0;
  } else {
    long long r0 = bb, r1 = aa;
    while (r1 != 0) {
      long long q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    inv = ((x0 % m2g) + m2g) % m2g;
  }
  __int128 step = (__int128)(((t % m2g) * (__int128)inv) % m2g);
  __int128 x = (__int128)a.r + (__int128)a.m * step;
  long long xr = static_cast<long long>(((x % lcm) + lcm) % lcm);
  a.r = xr;
  a.m = lcm;
  return true;
}

struct IntEdge {
  int u, v;
  long long gm;  // gcd(|label|, m): the label's strength modulo m
};

// Flattened view used by the exhaustive searches.
struct SearchProblem {
  int n = 0;
  long long m = 1;
  std::vector<std::vector<std::pair<int, long long>>> adj;  // vertex -> (other, gm)

  void add_edge(int u, int v, long long gm) {
    adj[u].push_back({v, gm});
    adj[v].push_back({u, gm});
  }
};

SearchProblem make_problem(const LabeledGraph& g, const Int& m) {
  SearchProblem p;
  p.n = g.vertex_count();
  p.m = to_search_width(m);
  p.adj.assign(p.n + 1, {});
  for (const Edge& e : g.edges()) {
    Int gm = boost::multiprecision::gcd(boost::multiprecision::abs(e.label.int_value()), m);
    long long w = static_cast<long long>(gm == 0 ? m : gm);
    p.add_edge(e.u, e.v, w);
  }
  return p;
}

// Depth-first assignment in vertex order with candidate sets narrowed by the
// congruences against already-assigned neighbors. Calls sink per solution.
void explore(const SearchProblem& p, std::size_t node_limit,
             const std::function<void(const std::vector<long long>&)>& sink) {
  std::vector<long long> values(p.n + 1, 0);
  std::size_t nodes = 0;

  std::function<void(int)> assign = [&](int v) {
    if (v > p.n) {
      sink(values);
      return;
    }
    Cong c;
    for (auto [u, gm] : p.adj[v])
      if (u < v && !merge(c, values[u] % gm, gm)) return;
    for (long long x = c.r; x < p.m; x += c.m) {
      if (++nodes > node_limit)
        throw SearchSpaceTooLargeError("exhaustive spline search exceeded " +
                                       std::to_string(node_limit) + " nodes");
      values[v] = x;
      assign(v + 1);
    }
  };
  assign(1);
}

}  // namespace

Int default_modulus(const LabeledGraph& g) {
  Int m = 1;
  for (const Edge& e : g.edges()) {
    Int l = boost::multiprecision::abs(e.label.int_value());
    if (l != 0) m = boost::multiprecision::lcm(m, l);
  }
  return m;
}

std::vector<Spline> enumerate_splines_mod(const LabeledGraph& g, const Int& modulus,
                                          std::size_t space_limit) {
  require_integers(g, "exhaustive spline enumeration");
  if (modulus < 0) throw SchemaError("modulus must be nonnegative");
  Int m = modulus == 0 ? default_modulus(g) : modulus;

  Int raw = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    raw *= m;
    if (raw > Int(space_limit))
      throw SearchSpaceTooLargeError("search space " + m.str() + "^" +
                                     std::to_string(g.vertex_count()) + " exceeds " +
                                     std::to_string(space_limit));
  }

  SearchProblem p = make_problem(g, m);
  std::vector<Spline> out;
  // The raw-space bound already caps the work; the node guard only needs to
  // stay out of the way (the search tree has at most twice the leaves).
  explore(p, 2 * space_limit + 16, [&](const std::vector<long long>& values) {
    Spline s;
    for (int v = 1; v <= p.n; ++v) s.values.push_back(RingElem::integer(Int(values[v])));
    out.push_back(std::move(s));
  });
  return out;
}

Int count_splines_mod(const LabeledGraph& g, const Int& modulus, std::size_t node_limit) {
  require_integers(g, "exhaustive spline counting");
  if (modulus < 0) throw SchemaError("modulus must be nonnegative");
  Int m = modulus == 0 ? default_modulus(g) : modulus;

  SearchProblem p = make_problem(g, m);
  Int count = 0;
  explore(p, node_limit, [&](const std::vector<long long>&) { ++count; });
  return count;
}

RingElem oracle_min_leading_entry(const LabeledGraph& g, int i, std::size_t node_limit) {
  require_integers(g, "the leading-entry oracle");
  int n = g.vertex_count();
  if (i < 1 || i > n)
    throw SchemaError("vertex " + std::to_string(i) + " out of range");
  if (i == 1) return RingElem::integer(1);

  // Vertices joined by zero labels carry equal values in every spline, so
  // merge them; each group is represented by its smallest member.
  std::vector<int> root(n + 1);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return root[v] == v ? v : root[v] = find(root[v]);
  };
  for (const Edge& e : g.edges())
    if (e.label.is_zero()) {
      int a = find(e.u), b = find(e.v);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  if (find(i) < i)
    throw NoFlowUpFoundError("zero labels pin entry " + std::to_string(i) +
                             " to an earlier, vanishing vertex");

  // Quotient graph on the group representatives, renumbered by their order.
  std::vector<int> reps;
  for (int v = 1; v <= n; ++v)
    if (find(v) == v) reps.push_back(v);
  std::vector<int> renum(n + 1, 0);
  for (std::size_t r = 0; r < reps.size(); ++r) renum[reps[r]] = static_cast<int>(r) + 1;
  int iq = renum[find(i)];

  Int m_big = default_modulus(g);
  SearchProblem p;
  p.n = static_cast<int>(reps.size());
  p.m = to_search_width(m_big);
  p.adj.assign(p.n + 1, {});
  for (const Edge& e : g.edges()) {
    if (e.label.is_zero()) continue;
    int u = renum[find(e.u)], v = renum[find(e.v)];
    if (u == v) continue;  // a cycle of merged vertices satisfies it trivially
    Int gm = boost::multiprecision::gcd(boost::multiprecision::abs(e.label.int_value()), m_big);
    p.add_edge(u, v, static_cast<long long>(gm));
  }

  // (0,...,0,m,...,m) is a spline whenever every label divides m, and sums
  // and multiples of splines are splines, so the minimum divides m; only
  // its divisors need trying.
  std::vector<long long> divisors;
  for (long long d = 1; d * d <= p.m; ++d)
    if (p.m % d == 0) {
      divisors.push_back(d);
      if (d != p.m / d) divisors.push_back(p.m / d);
    }
  std::sort(divisors.begin(), divisors.end());

  // Assignment order: the pinned vertices first, then outward by adjacency.
  std::vector<int> order;
  std::vector<char> placed(p.n + 1, 0);
  for (int v = 1; v <= iq; ++v) placed[v] = 1;
  std::vector<int> frontier;
  for (int v = 1; v <= iq; ++v) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (auto [u, gm] : p.adj[v]) {
        (void)gm;
        if (!placed[u]) {
          placed[u] = 1;
          order.push_back(u);
          next.push_back(u);
        }
      }
    frontier = std::move(next);
  }

  std::size_t nodes = 0;
  std::vector<long long> values(p.n + 1, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t step) {
    if (step == order.size()) return true;
    int v = order[step];
    Cong c;
    for (auto [u, gm] : p.adj[v])
      if (u <= iq || placed[u] == 2)
        if (!merge(c, values[u] % gm, gm)) return false;
    placed[v] = 2;
    for (long long x = c.r; x < p.m; x += c.m) {
      if (++nodes > node_limit)
        throw SearchSpaceTooLargeError("leading-entry oracle exceeded " +
                                       std::to_string(node_limit) + " nodes");
      values[v] = x;
      if (extend(step + 1)) {
        placed[v] = 1;
        return true;
      }
    }
    placed[v] = 1;
    return false;
  };

  for (long long c : divisors) {
    if (c == p.m) break;  // always attainable, checked last
    bool feasible = true;
    for (auto [u, gm] : p.adj[iq])
      if (u < iq && c % gm != 0) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    values[iq] = c;
    if (extend(0)) return RingElem::integer(Int(c));
  }
  return RingElem::integer(m_big);
}

std::vector<TrailConstraint> all_trail_constraints(const LabeledGraph& g, int source,
                                                   std::size_t limit) {
  if (source < 1 || source > g.vertex_count())
    throw SchemaError("vertex " + std::to_string(source) + " out of range");

  std::vector<TrailConstraint> out;
  std::vector<char> used(g.edges().size(), 0);
  std::size_t work = 0;
  std::function<void(int, const RingElem&)> walk = [&](int v, const RingElem& acc) {
    if (++work > limit)
      throw PathLimitExceededError("more than " + std::to_string(limit) +
                                   " trails explored from vertex " +
                                   std::to_string(source));
    if (v < source) out.push_back({v, acc});
    for (auto [w, e] : g.neighbors(v)) {
      if (used[e]) continue;
      used[e] = 1;
      walk(w, gcd(acc, g.edges()[e].label));
      used[e] = 0;
    }
  };
  walk(source, RingElem::zero(g.ring()));
  return out;
}

}  // namespace gspline
