#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planeforge::plane {

struct UnsupportedOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidPlane : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Homogeneous triples hold GF(q) element codes, normalized so the first
/// nonzero coordinate is 1. Planes read back from the incidence file format
/// carry only the combinatorial data; their triples are zeroed.
struct Point {
  int id = 0;
  std::array<int, 3> homog{0, 0, 0};
};

struct Line {
  int id = 0;
  std::array<int, 3> homog{0, 0, 0};
  std::vector<int> members;  // sorted point ids
};

struct Plane {
  int q = 0;
  int n = 0;  // q^2 + q + 1
  std::vector<Point> points;
  std::vector<Line> lines;
  std::vector<std::vector<int>> point_to_lines;  // sorted incident line ids
};

struct AxiomReport {
  bool two_points_unique_line = false;   // axiom (i)
  bool two_lines_unique_point = false;   // axiom (ii)
  bool line_sizes_ok = false;            // axiom (iii): |line| = q+1
  bool point_degrees_ok = false;         // every point on q+1 lines
  // First witness of a failed pairwise axiom, when any.
  std::optional<std::pair<int, int>> bad_point_pair;
  std::optional<std::pair<int, int>> bad_line_pair;

  bool all_pass() const {
    return two_points_unique_line && two_lines_unique_point && line_sizes_ok &&
           point_degrees_ok;
  }
};

/// PG(2, q) with ids assigned in lexicographic order of normalized triples.
Plane build_plane(int q);

AxiomReport verify_axioms(const Plane& pl);

/// The dual plane: points become lines and vice versa, incidence transposed.
/// Throws InvalidPlane if pl fails the axioms.
Plane dual(const Plane& pl);

/// Plain-text incidence format: first line "q n", then n lines of sorted
/// point ids. Round-trips bit-exactly.
void write_incidence(const Plane& pl, std::ostream& out);
Plane read_incidence(std::istream& in);

}  // namespace planeforge::plane
