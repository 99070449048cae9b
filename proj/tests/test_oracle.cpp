#include "doctest.h"
#include "gspline/errors.hpp"

#include "gspline/flowup.hpp"
#include "gspline/oracle.hpp"
#include "gspline/trails.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace gspline;
using testutil::zi;

namespace {

std::vector<std::string> key(const Spline& s) {
  std::vector<std::string> k;
  for (const auto& v : s.values) k.push_back(print_elem(v));
  return k;
}

}  // namespace

TEST_CASE("default modulus is the lcm of the nonzero labels") {
  CHECK(default_modulus(load_graph(testutil::c4_json())) == Int(360));
  CHECK(default_modulus(testutil::zgraph(2, {{1, 2, 0}})) == Int(1));
  CHECK(default_modulus(testutil::zgraph(3, {{1, 2, 1}, {2, 3, -1}})) == Int(1));
  CHECK(default_modulus(testutil::zgraph(3, {{1, 2, -4}, {2, 3, 6}, {1, 3, 0}})) == Int(12));
}

TEST_CASE("enumeration over a single edge") {
  auto g = testutil::zgraph(2, {{1, 2, 2}});
  auto got = enumerate_splines_mod(g);
  REQUIRE(got.size() == 2);
  CHECK(got[0].f(1) == zi(0));
  CHECK(got[0].f(2) == zi(0));
  CHECK(got[1].f(1) == zi(1));
  CHECK(got[1].f(2) == zi(1));

  // explicit modulus 4: the label still divides it, so these are the
  // splines with entries in [0, 4)
  auto wide = enumerate_splines_mod(g, Int(4));
  CHECK(wide.size() == 8);
  for (const auto& s : wide) {
    CHECK(is_spline(g, s));
    CHECK(divides(zi(2), s.f(2) - s.f(1)));
  }
  CHECK(count_splines_mod(g, Int(4)) == Int(8));
}

TEST_CASE("enumeration on a triangle of even labels finds only constants") {
  auto g = testutil::zgraph(3, {{1, 2, 2}, {2, 3, 2}, {1, 3, 2}});
  auto got = enumerate_splines_mod(g);
  REQUIRE(got.size() == 2);
  CHECK(got[0].values == testutil::zspline({0, 0, 0}).values);
  CHECK(got[1].values == testutil::zspline({1, 1, 1}).values);
  CHECK(count_splines_mod(g) == Int(2));
}

TEST_CASE("enumerated sets are closed under addition mod m") {
  auto check_closure = [](const LabeledGraph& g, const Int& m) {
    auto all = enumerate_splines_mod(g, m);
    std::set<std::vector<std::string>> seen;
    for (const auto& s : all) seen.insert(key(s));
    CHECK(seen.size() == all.size());
    RingElem mod = RingElem::integer(m);
    for (size_t a = 0; a < all.size(); ++a)
      for (size_t b = a; b < all.size(); ++b) {
        Spline sum = all[a] + all[b];
        for (auto& v : sum.values) v = mod_canonical(v, mod);
        CHECK(seen.count(key(sum)) == 1);
      }
  };
  check_closure(testutil::zgraph(3, {{1, 2, 2}, {2, 3, 3}}), Int(6));
  check_closure(testutil::zgraph(4, {{1, 2, 2}, {2, 3, 4}, {3, 4, 2}, {1, 4, 4}}), Int(8));
}

TEST_CASE("spline count on the square matches the product formula") {
  auto g = load_graph(testutil::c4_json());
  auto basis = build_basis(g);
  Int m = default_modulus(g);
  REQUIRE(m == Int(360));
  REQUIRE(basis.q == zi(2160));
  // the lattice of splines with entries mod m has index q in (Z/m)^n
  Int expected = m * m * m * m / basis.q.int_value();
  CHECK(expected == Int(7'776'000));
  CHECK(count_splines_mod(g) == expected);
}

TEST_CASE("spline count matches the product formula on random graphs") {
  std::mt19937_64 rng(4101);
  for (int trial = 0; trial < 15; ++trial) {
    std::uniform_int_distribution<int> nd(2, 4);
    auto g = testutil::random_connected(rng, nd(rng), 1, 1, 6);
    Int m = default_modulus(g);
    auto basis = build_basis(g);
    Int expected = 1;
    for (int i = 0; i < g.vertex_count(); ++i) expected *= m;
    expected /= basis.q.int_value();
    CAPTURE(trial);
    CHECK(count_splines_mod(g) == expected);
  }
}

TEST_CASE("search-space guards") {
  auto g4 = testutil::zgraph(4, {{1, 2, 2}, {2, 3, 2}, {3, 4, 2}});
  CHECK_THROWS_AS(enumerate_splines_mod(g4, Int(100)), SearchSpaceTooLargeError);
  CHECK_THROWS_AS(count_splines_mod(load_graph(testutil::c4_json()), Int(0), 10),
                  SearchSpaceTooLargeError);
  CHECK_THROWS_AS(enumerate_splines_mod(g4, Int(-2)), SchemaError);

  auto tri = testutil::zgraph(3, {{1, 2, 4}, {1, 3, 6}, {2, 3, 2}});
  CHECK_THROWS_AS(oracle_min_leading_entry(tri, 2, 0), SearchSpaceTooLargeError);
  CHECK(oracle_min_leading_entry(tri, 2) == zi(4));
}

TEST_CASE("oracle searches require the integer ring") {
  auto fig = load_graph(testutil::fig1_json());
  CHECK_THROWS_AS(enumerate_splines_mod(fig), DomainError);
  CHECK_THROWS_AS(count_splines_mod(fig), DomainError);
  CHECK_THROWS_AS(oracle_min_leading_entry(fig, 2), DomainError);
}

TEST_CASE("minimum leading entry by search matches the trail computation") {
  auto g = load_graph(testutil::c4_json());
  CHECK(oracle_min_leading_entry(g, 1) == zi(1));
  CHECK(oracle_min_leading_entry(g, 2) == zi(8));
  CHECK(oracle_min_leading_entry(g, 3) == zi(15));
  CHECK(oracle_min_leading_entry(g, 4) == zi(18));

  std::mt19937_64 rng(880);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> nd(2, 5);
    auto h = testutil::random_connected(rng, nd(rng), 1, 1, 12);
    for (int i = 1; i <= h.vertex_count(); ++i) {
      CAPTURE(trial);
      CAPTURE(i);
      CHECK(oracle_min_leading_entry(h, i) == smallest_leading_entry(h, i));
    }
  }
}

TEST_CASE("zero labels contract before the leading-entry search") {
  auto pinned = testutil::zgraph(3, {{1, 2, 4}, {2, 3, 0}});
  CHECK(oracle_min_leading_entry(pinned, 2) == zi(4));
  CHECK(oracle_min_leading_entry(pinned, 2) == smallest_leading_entry(pinned, 2));
  // entry 3 is forced equal to entry 2, which a flow-up class at 3 zeroes out
  CHECK_THROWS_AS(oracle_min_leading_entry(pinned, 3), NoFlowUpFoundError);
  CHECK_THROWS_AS(build_flowup(pinned, 3), DegenerateFlowUpError);
  CHECK_THROWS_AS(oracle_min_leading_entry(testutil::zgraph(2, {{1, 2, 0}}), 2),
                  NoFlowUpFoundError);

  // a zero label between free vertices merges them without pinning
  auto merged = testutil::zgraph(3, {{1, 2, 0}, {1, 3, 6}, {2, 3, 4}});
  CHECK(oracle_min_leading_entry(merged, 3) == zi(12));
  CHECK(smallest_leading_entry(merged, 3) == zi(12));
}

TEST_CASE("every edge-distinct walk is listed on a short path") {
  auto g = testutil::zgraph(3, {{1, 2, 2}, {2, 3, 3}});
  auto got = all_trail_constraints(g, 3);
  REQUIRE(got.size() == 2);
  CHECK(got[0].target == 2);
  CHECK(got[0].gcd == zi(3));
  CHECK(got[1].target == 1);
  CHECK(got[1].gcd == zi(1));

  CHECK(all_trail_constraints(g, 1).empty());
  CHECK_THROWS_AS(all_trail_constraints(g, 9), SchemaError);
  CHECK_THROWS_AS(all_trail_constraints(load_graph(testutil::c8_json()), 5, 3),
                  PathLimitExceededError);
}

TEST_CASE("walks through lower vertices appear in the unpruned family") {
  auto g = load_graph(testutil::c4_json());
  auto got = all_trail_constraints(g, 3);
  // the two constraint paths survive unchanged...
  auto has = [&](int target, long long d) {
    return std::any_of(got.begin(), got.end(), [&](const TrailConstraint& c) {
      return c.target == target && c.gcd == zi(d);
    });
  };
  CHECK(has(1, 5));
  CHECK(has(2, 3));
  // ...alongside walks that keep going past the first lower vertex
  CHECK(has(2, 1));
  CHECK(got.size() > 2);
}

TEST_CASE("pruned constraint paths solve like the full walk family") {
  std::mt19937_64 rng(7130);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> nd(2, 6);
    auto g = testutil::random_connected(rng, nd(rng), 2, 1, 9);
    auto basis = build_basis(g);
    // a genuine spline with small random coordinates in the basis
    std::uniform_int_distribution<long long> cd(-3, 3);
    Spline s = trivial_spline(g, zi(0));
    for (const auto& c : basis.classes) s = s + zi(cd(rng)) * c;
    for (int k = 2; k <= g.vertex_count(); ++k) {
      CongruenceSystem pruned(g.ring());
      RingElem pruned_mod = RingElem::one(g.ring());
      for (const auto& path : constraint_paths(g, k)) {
        pruned.add(s.f(path.target), path.gcd);
        pruned_mod = lcm(pruned_mod, path.gcd);
      }
      CongruenceSystem full(g.ring());
      RingElem full_mod = RingElem::one(g.ring());
      for (const auto& c : all_trail_constraints(g, k)) {
        full.add(s.f(c.target), c.gcd);
        full_mod = lcm(full_mod, c.gcd);
      }
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(crt_solve(pruned) == crt_solve(full));
      CHECK(pruned_mod == full_mod);
      // the spline's own entry satisfies the solved congruence
      CHECK(divides(full_mod, s.f(k) - crt_solve(full)));
    }
  }
}
