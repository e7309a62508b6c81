#include <doctest.h>

#include <sstream>
#include <tuple>

#include "planeforge/plane.hpp"

using namespace planeforge::plane;

TEST_CASE("plane sizes match q^2+q+1") {
  for (const auto [q, n, line_size] :
       {std::tuple{2, 7, 3}, std::tuple{3, 13, 4}, std::tuple{4, 21, 5}}) {
    const Plane pl = build_plane(q);
    CAPTURE(q);
    CHECK(pl.n == n);
    CHECK(static_cast<int>(pl.points.size()) == n);
    CHECK(static_cast<int>(pl.lines.size()) == n);
    for (const auto& l : pl.lines)
      CHECK(static_cast<int>(l.members.size()) == line_size);
  }
}

TEST_CASE("axioms pass for constructed planes") {
  for (int q : {2, 3, 4, 5, 9}) {
    CAPTURE(q);
    CHECK(verify_axioms(build_plane(q)).all_pass());
  }
}

TEST_CASE("removing an incidence breaks axiom (i) with a witness") {
  Plane pl = build_plane(2);
  const int victim_point = pl.lines[0].members.back();
  pl.lines[0].members.pop_back();
  auto& incident = pl.point_to_lines[victim_point];
  incident.erase(incident.begin());  // line 0 was its first incident line
  const auto rep = verify_axioms(pl);
  CHECK_FALSE(rep.two_points_unique_line);
  CHECK(rep.bad_point_pair.has_value());
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("unsupported orders are rejected") {
  CHECK_THROWS_AS(build_plane(6), UnsupportedOrder);
  CHECK_THROWS_AS(build_plane(1), UnsupportedOrder);
  CHECK_THROWS_AS(build_plane(10), UnsupportedOrder);
}

TEST_CASE("dual is a valid plane") {
  const Plane pl = build_plane(2);
  const Plane d = dual(pl);
  CHECK(verify_axioms(d).all_pass());

  const Plane d3 = dual(build_plane(3));
  for (const auto& l : d3.lines) CHECK(l.members.size() == 4);
}

TEST_CASE("double dual restores the incidence structure") {
  const Plane pl = build_plane(3);
  const Plane dd = dual(dual(pl));
  for (int i = 0; i < pl.n; ++i) {
    CHECK(dd.lines[i].members == pl.lines[i].members);
    CHECK(dd.point_to_lines[i] == pl.point_to_lines[i]);
  }
}

TEST_CASE("dual rejects an invalid plane") {
  Plane pl = build_plane(2);
  pl.lines[0].members.pop_back();
  CHECK_THROWS_AS(dual(pl), InvalidPlane);
}

TEST_CASE("incidence file round-trips bit-exactly") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    const Plane pl = build_plane(q);
    std::ostringstream first;
    write_incidence(pl, first);
    std::istringstream in(first.str());
    const Plane back = read_incidence(in);
    std::ostringstream second;
    write_incidence(back, second);
    CHECK(first.str() == second.str());
    CHECK(verify_axioms(back).all_pass());
  }
}
