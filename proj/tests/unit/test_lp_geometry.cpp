#include <doctest.h>

#include <algorithm>

#include "planeforge/geometry.hpp"
#include "planeforge/lp.hpp"
#include "planeforge/plane.hpp"
#include "planeforge/rng.hpp"

using namespace planeforge;
using namespace planeforge::geometry;

namespace {

RationalPoint pt(std::vector<long long> coords) {
  RationalPoint p;
  for (long long c : coords) p.coords.emplace_back(c);
  return p;
}

PolytopeV poly(std::vector<std::vector<long long>> verts) {
  PolytopeV out;
  for (auto& v : verts) out.vertices.push_back(pt(v));
  return out;
}

// Independent 2D membership test: a point is in the hull iff it lies in some
// triangle (or segment) of hull vertices, decided by orientation signs only.
bool in_hull_2d_by_triangles(const RationalPoint& a, const PolytopeV& p) {
  const auto& vs = p.vertices;
  const auto on_segment = [&](const RationalPoint& u, const RationalPoint& v) {
    if (orientation({u, v, a}) != 0) return false;
    for (int c = 0; c < 2; ++c) {
      const auto lo = std::min(u.coords[c], v.coords[c]);
      const auto hi = std::max(u.coords[c], v.coords[c]);
      if (a.coords[c] < lo || a.coords[c] > hi) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] == a) return true;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (on_segment(vs[i], vs[j])) return true;
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        const int s1 = orientation({vs[i], vs[j], a});
        const int s2 = orientation({vs[j], vs[k], a});
        const int s3 = orientation({vs[k], vs[i], a});
        if (s1 == 0 && s2 == 0 && s3 == 0) continue;  // degenerate triple
        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0))
          return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("lp feasibility basics") {
  // x + y = 2, x - y = 0 has the nonnegative solution (1, 1).
  const auto ok = lp::solve_equality_feasibility(
      {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}},
      {Rational(2), Rational(0)});
  REQUIRE(ok.feasible);
  CHECK(ok.x[0] == 1);
  CHECK(ok.x[1] == 1);

  // x + y = -1 has no nonnegative solution.
  const auto bad = lp::solve_equality_feasibility({{Rational(1), Rational(1)}},
                                                  {Rational(-1)});
  CHECK_FALSE(bad.feasible);
}

TEST_CASE("orientation sign and degeneracy") {
  CHECK(orientation({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == 1);
  CHECK(orientation({pt({0, 0}), pt({1, 1}), pt({2, 2})}) == 0);
  CHECK(orientation({pt({0, 0}), pt({0, 1}), pt({1, 0})}) == -1);
  CHECK_THROWS_AS(orientation({pt({0, 0, 0}), pt({1, 0}), pt({0, 1})}),
                  DimensionMismatch);
}

TEST_CASE("orientation parity under permutations") {
  const std::vector<RationalPoint> base = {pt({0, 0}), pt({3, 1}), pt({1, 4})};
  const int s = orientation(base);
  std::vector<int> perm = {0, 1, 2};
  do {
    std::vector<RationalPoint> arranged;
    for (int i : perm) arranged.push_back(base[i]);
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perm[i] > perm[j]) ++inversions;
    CHECK(orientation(arranged) == (inversions % 2 ? -s : s));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("general position checks") {
  CHECK(general_position({pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})}, 2).ok);
  const auto collinear = general_position({pt({0, 0}), pt({1, 1}), pt({2, 2})}, 2);
  CHECK_FALSE(collinear.ok);
  CHECK(collinear.witness == std::vector<int>{0, 1, 2});
  CHECK(general_position({pt({0, 0}), pt({1, 0}), pt({0, 1})}, 2).ok);
}

TEST_CASE("hulls_intersect spot cases") {
  const auto meet = hulls_intersect(
      {poly({{0, 0}, {2, 0}, {0, 2}}), poly({{1, 1}, {3, 1}, {1, 3}})});
  REQUIRE(meet.has_value());
  CHECK(point_in_hull(*meet, poly({{0, 0}, {2, 0}, {0, 2}})));
  CHECK(point_in_hull(*meet, poly({{1, 1}, {3, 1}, {1, 3}})));

  CHECK_FALSE(hulls_intersect({poly({{0, 0}, {1, 0}}), poly({{2, 0}, {3, 0}})})
                  .has_value());

  // The three sides of a triangle: pairwise meets, empty triple meet.
  const auto ab = poly({{0, 0}, {4, 0}});
  const auto bc = poly({{4, 0}, {0, 4}});
  const auto ca = poly({{0, 4}, {0, 0}});
  CHECK(hulls_intersect({ab, bc}).has_value());
  CHECK(hulls_intersect({bc, ca}).has_value());
  CHECK(hulls_intersect({ca, ab}).has_value());
  CHECK_FALSE(hulls_intersect({ab, bc, ca}).has_value());
}

TEST_CASE("hulls_intersect agrees with the triangle-membership oracle") {
  SplitMix64 rng(4242);
  int feasible_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<PolytopeV> polys;
    for (int p = 0; p < 2; ++p) {
      PolytopeV poly;
      const int nv = 3 + static_cast<int>(rng.next_below(3));
      for (int v = 0; v < nv; ++v)
        poly.vertices.push_back(pt({static_cast<long long>(rng.next_below(16)),
                                    static_cast<long long>(rng.next_below(16))}));
      polys.push_back(std::move(poly));
    }
    const auto result = hulls_intersect(polys);
    // Half-integer grid scan over the bounding box.
    bool oracle_found = false;
    for (long long gx = 0; gx <= 32 && !oracle_found; ++gx)
      for (long long gy = 0; gy <= 32 && !oracle_found; ++gy) {
        RationalPoint g;
        g.coords = {Rational(gx, 2), Rational(gy, 2)};
        oracle_found = in_hull_2d_by_triangles(g, polys[0]) &&
                       in_hull_2d_by_triangles(g, polys[1]);
      }
    CAPTURE(trial);
    // Infeasible instances must never yield an oracle point; feasible
    // witnesses must verify in every hull.
    if (!result.has_value()) {
      CHECK_FALSE(oracle_found);
    } else {
      ++feasible_count;
      for (const auto& p : polys) CHECK(point_in_hull(*result, p));
      CHECK(in_hull_2d_by_triangles(*result, polys[0]));
    }
  }
  CHECK(feasible_count > 0);
  CHECK(feasible_count < 100);
}

TEST_CASE("nerve check of the simplex representation of the Fano plane") {
  const auto pl = plane::build_plane(2);
  Representation rep;
  rep.d = 6;
  // Point p maps to the p-th vertex of a 6-simplex: e_p for p < 6, the
  // origin for p = 6.
  auto vertex = [](int p) {
    RationalPoint v;
    v.coords.assign(6, 0);
    if (p < 6) v.coords[p] = 1;
    return v;
  };
  for (const auto& l : pl.lines) {
    PolytopeV poly;
    for (int p : l.members) poly.vertices.push_back(vertex(p));
    rep.sets[l.id] = std::move(poly);
  }
  const auto report = nerve_of_representation(rep, pl);
  CHECK(report.match);
  CHECK(report.max_k == 7);

  // Translating one set far away breaks a pairwise check.
  Representation broken = rep;
  for (auto& v : broken.sets[0].vertices) v.coords[0] += 100;
  const auto bad = nerve_of_representation(broken, pl);
  CHECK_FALSE(bad.match);
  CHECK(bad.witness_lines.size() == 2);

  // All sets equal: some non-concurrent triple intersects geometrically.
  Representation collapsed = rep;
  for (auto& [id, p] : collapsed.sets) p = rep.sets.at(0);
  const auto shared = nerve_of_representation(collapsed, pl);
  CHECK_FALSE(shared.match);
  CHECK_FALSE(shared.lines_concurrent);
  CHECK(shared.hulls_meet);
}

TEST_CASE("selection on a triangle finds the centroid") {
  const std::vector<RationalPoint> X = {pt({0, 0}), pt({6, 0}), pt({0, 6})};
  const auto res = selection_search(X, 2);
  CHECK(res.hit_fraction == 1);
  CHECK(res.parts.size() == 3);
  for (const auto& z : res.parts) CHECK(z.size() == 1);
}

TEST_CASE("selection in one dimension") {
  const std::vector<RationalPoint> X = {pt({0}), pt({2}), pt({5}), pt({9})};
  const auto res = selection_search(X, 1);
  // Splitting at the median, any a between the halves is in every
  // transversal interval.
  CHECK(res.hit_fraction == 1);
}

TEST_CASE("selection result is re-verified by the exhaustive fraction") {
  SplitMix64 rng(11);
  std::vector<RationalPoint> X;
  for (int i = 0; i < 7; ++i)
    X.push_back(pt({static_cast<long long>(rng.next_below(50)),
                    static_cast<long long>(rng.next_below(50))}));
  if (!general_position(X, 2).ok) return;  // seed chosen so this holds
  SelectionOptions opts;
  opts.max_candidates = 20;
  const auto res = selection_search(X, 2, opts);
  CHECK(res.hit_fraction > 0);
  CHECK(transversal_hit_fraction(X, res.parts, res.a) == res.hit_fraction);
}

TEST_CASE("selection rejects unsupported dimensions") {
  CHECK_THROWS_AS(selection_search({pt({0, 0, 0})}, 3),
                  DimensionUnsupported);
}

TEST_CASE("audit flags an invalid planar representation of the Fano plane") {
  const auto pl = plane::build_plane(2);
  Representation rep;
  rep.d = 2;
  for (const auto& l : pl.lines)
    rep.sets[l.id] = poly({{0, 0}, {4, 0}, {0, 4}});
  const auto report = audit_representation(rep, pl);
  CHECK_FALSE(report.representation_valid);
  CHECK_FALSE(report.nerve.match);
  CHECK_FALSE(report.nerve.witness_lines.empty());
  CHECK(report.nerve.max_k == 4);
}

TEST_CASE("audit of the valid R^6 representation skips the selection phase") {
  const auto pl = plane::build_plane(2);
  Representation rep;
  rep.d = 6;
  auto vertex = [](int p) {
    RationalPoint v;
    v.coords.assign(6, 0);
    if (p < 6) v.coords[p] = 1;
    return v;
  };
  for (const auto& l : pl.lines) {
    PolytopeV poly;
    for (int p : l.members) poly.vertices.push_back(vertex(p));
    rep.sets[l.id] = std::move(poly);
  }
  const auto report = audit_representation(rep, pl);
  CHECK(report.representation_valid);
  CHECK(report.witness_points_found);
  CHECK_FALSE(report.selection_ran);
  CHECK(report.selection_skipped_reason == "DimensionUnsupported");
  // Each witness point must lie in all its incident sets.
  for (int p = 0; p < pl.n; ++p)
    for (int l : pl.point_to_lines[p])
      CHECK(point_in_hull(report.witness_points[p], rep.sets.at(l)));
}

TEST_CASE("representation JSON round-trips") {
  Representation rep;
  rep.d = 2;
  rep.sets[0] = poly({{0, 0}, {1, 0}});
  rep.sets[3] = poly({{2, 5}});
  rep.sets[3].vertices[0].coords[0] = Rational(1, 3);
  const auto back = representation_from_json(representation_to_json(rep));
  CHECK(back.d == 2);
  CHECK(back.sets.size() == 2);
  CHECK(back.sets.at(3).vertices[0].coords[0] == Rational(1, 3));
  CHECK(back.sets.at(0).vertices == rep.sets.at(0).vertices);
}
