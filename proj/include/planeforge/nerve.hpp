#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "planeforge/complex.hpp"
#include "planeforge/plane.hpp"

namespace planeforge::nerve {

struct LabelMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NamedSet {
  std::string name;
  std::vector<int> elems;  // sorted, nonempty
};

struct SetFamily {
  std::vector<int> ground;       // sorted element ids
  std::vector<NamedSet> members; // nerve vertex i corresponds to members[i]
};

/// Nerve of the family: vertex set {0, ..., |members|-1}, a subset is a face
/// iff its sets share an element. Built as the union, over ground elements x,
/// of the full simplex on {i : x in members[i]} -- never by testing all 2^n
/// index subsets.
cx::SimplicialComplex nerve_of(const SetFamily& fam);

/// The family {line id -> member points}: the combinatorial stand-in for the
/// hulls of vertex subsets of a (q^2+q)-simplex, which intersect exactly in
/// the face spanned by their common vertices.
SetFamily simplex_representation_family(const plane::Plane& pl);

/// Face-set equality after relabeling K1's vertices through `relabel`.
/// Throws LabelMismatch if the map misses a vertex of K1 or is not injective.
bool nerve_equals(const cx::SimplicialComplex& K1, const cx::SimplicialComplex& K2,
                  const std::map<int, int>& relabel);

/// File format mirrors the plane incidence format: a two-integer header
/// line, then one set per line as sorted element ids.
SetFamily read_family(std::istream& in);
void write_family(const SetFamily& fam, std::ostream& out);

}  // namespace planeforge::nerve
