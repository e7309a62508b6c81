#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "planeforge/nerve.hpp"
#include "planeforge/plane.hpp"

using namespace planeforge;
using namespace planeforge::nerve;

namespace {

SetFamily family_of(std::vector<std::vector<int>> sets) {
  SetFamily fam;
  std::set<int> ground;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::sort(sets[i].begin(), sets[i].end());
    for (int x : sets[i]) ground.insert(x);
    fam.members.push_back({"set" + std::to_string(i), sets[i]});
  }
  fam.ground.assign(ground.begin(), ground.end());
  return fam;
}

// Oracle: test every index subset for a common element.
cx::SimplicialComplex nerve_by_subsets(const SetFamily& fam) {
  const int n = static_cast<int>(fam.members.size());
  std::vector<cx::Face> faces;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (bits >> i & 1) idx.push_back(i);
    bool common = false;
    for (int x : fam.ground) {
      bool in_all = true;
      for (int i : idx)
        in_all = in_all && std::binary_search(fam.members[i].elems.begin(),
                                              fam.members[i].elems.end(), x);
      if (in_all) {
        common = true;
        break;
      }
    }
    if (common) faces.push_back(idx);
  }
  return cx::SimplicialComplex::from_maximal(faces);
}

}  // namespace

TEST_CASE("three pairwise-meeting sets with empty triple intersection") {
  const auto fam = family_of({{1, 2}, {2, 3}, {1, 3}});
  const auto K = nerve_of(fam);
  CHECK(K.f_vector() == std::vector<std::size_t>{1, 3, 3});
  CHECK(K.faces() == nerve_by_subsets(fam).faces());
}

TEST_CASE("a single set gives one vertex") {
  const auto K = nerve_of(family_of({{5, 6, 7}}));
  CHECK(K.f_vector() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("nerve of the Fano line family") {
  const auto pl = plane::build_plane(2);
  const auto fam = simplex_representation_family(pl);
  CHECK(fam.members.size() == 7);
  for (const auto& s : fam.members) CHECK(s.elems.size() == 3);

  const auto K = nerve_of(fam);
  // Concurrent triples of lines correspond to points; each point lies on 3
  // lines, giving exactly 7 triangles, and every line pair meets.
  CHECK(K.f_vector() == std::vector<std::size_t>{1, 7, 21, 7});
  CHECK(K.faces() == nerve_by_subsets(fam).faces());
}

TEST_CASE("Fano nerve equals K_2 of the dual plane") {
  const auto pl = plane::build_plane(2);
  const auto K = nerve_of(simplex_representation_family(pl));
  const auto Kdual = cx::kq_complex(plane::dual(pl));
  std::map<int, int> identity;
  for (int i = 0; i < pl.n; ++i) identity[i] = i;
  CHECK(nerve_equals(K, Kdual, identity));
}

TEST_CASE("nerve has no face larger than q+1") {
  const auto pl = plane::build_plane(2);
  const auto fv = nerve_of(simplex_representation_family(pl)).f_vector();
  CHECK(fv.size() == 4);  // nothing beyond size q+1 = 3
}

TEST_CASE("nerve_equals distinguishes complexes and validates labels") {
  const auto full = cx::full_simplex(2);
  const auto boundary =
      cx::SimplicialComplex::from_maximal({{1, 2}, {2, 3}, {1, 3}});
  std::map<int, int> identity{{1, 1}, {2, 2}, {3, 3}};
  CHECK(nerve_equals(full, full, identity));
  CHECK_FALSE(nerve_equals(full, boundary, identity));
  CHECK_THROWS_AS(nerve_equals(full, full, std::map<int, int>{{1, 1}}),
                  LabelMismatch);
  CHECK_THROWS_AS(
      nerve_equals(full, full, std::map<int, int>{{1, 1}, {2, 1}, {3, 3}}),
      LabelMismatch);
}

TEST_CASE("adding a set never removes nerve faces on existing indices") {
  auto fam = family_of({{1, 2, 3}, {3, 4}, {2, 5}});
  const auto before = nerve_of(fam);
  fam.members.push_back({"extra", {1, 4, 5}});
  const auto after = nerve_of(fam);
  for (const auto& f : before.faces()) CHECK(after.contains(f));
}

TEST_CASE("family file round-trips and feeds the nerve") {
  const auto pl = plane::build_plane(2);
  std::ostringstream out;
  plane::write_incidence(pl, out);
  std::istringstream in(out.str());
  const auto fam = read_family(in);
  CHECK(fam.members.size() == 7);
  CHECK(nerve_of(fam).f_vector() == std::vector<std::size_t>{1, 7, 21, 7});

  std::ostringstream again;
  write_family(fam, again);
  std::istringstream in2(again.str());
  CHECK(nerve_of(read_family(in2)).f_vector() ==
        std::vector<std::size_t>{1, 7, 21, 7});
}
