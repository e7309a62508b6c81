#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "planeforge/plane.hpp"

namespace planeforge::cx {

struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct FaceNotInComplex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IllegalStep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A face is a sorted vector of vertex ids; {} is the empty face.
using Face = std::vector<int>;

constexpr std::size_t kMaxFaces = 1u << 24;

/// Explicit face-set representation, downward closed, containing the empty
/// face whenever the complex is nonempty. Faces are kept in a std::set so
/// iteration order is deterministic (lexicographic).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_maximal(const std::vector<Face>& maximal);

  /// "Empty" in the collapse sense: no nonempty faces remain. The lone empty
  /// face may linger after the last vertex removal (e.g. {emptyface,{1}} with
  /// sigma = tau = {1} leaves {emptyface}).
  bool empty() const {
    return faces_.empty() || (faces_.size() == 1 && faces_.begin()->empty());
  }
  std::size_t face_count() const { return faces_.size(); }
  bool contains(const Face& f) const { return faces_.count(f) != 0; }
  const std::set<Face>& faces() const { return faces_; }

  std::vector<int> vertices() const;
  std::vector<Face> maximal_faces() const;

  /// Inclusion-maximal faces of the complex that contain sigma.
  std::vector<Face> maximal_cofaces(const Face& sigma) const;

  bool is_downward_closed() const;

  /// counts[s] = number of faces of cardinality s (counts[0] counts the
  /// empty face).
  std::vector<std::size_t> f_vector() const;

  int dimension() const;  // -2 for the empty complex, -1 for {emptyface}

  void erase(const Face& f) { faces_.erase(f); }
  void insert_closed(const Face& f);  // f and all its subsets

 private:
  std::set<Face> faces_;
};

struct CollapseStep {
  Face sigma;
  Face tau;
};

/// Outcome of testing conditions (i)-(iv) of an elementary d-collapse for a
/// candidate sigma. When legal, tau is the unique inclusion-maximal coface;
/// sigma == tau is allowed and then the step removes sigma alone.
struct CollapseCheck {
  bool legal = false;
  Face tau;
  int failed_condition = 0;  // 1..4 when !legal
  std::string reason;
};

CollapseCheck legal_collapse(const SimplicialComplex& K, const Face& sigma, int d);

/// Removes the interval [sigma, tau]. The pair must be validated by
/// legal_collapse; otherwise IllegalStep is thrown.
SimplicialComplex apply_collapse(const SimplicialComplex& K, const Face& sigma,
                                 const Face& tau);

/// The d-simplex on vertices 1..d+1 with all faces.
SimplicialComplex full_simplex(int d);

/// The C(d+1, 2) edge collapses, in lexicographic order of the edges, that
/// take the d-simplex down to its vertex set.
std::vector<CollapseStep> simplex_collapse_sequence(int d);

/// One vertex-removal step (sigma = tau = {v}) per remaining vertex.
std::vector<CollapseStep> vertex_removal_steps(const SimplicialComplex& K);

/// K_q: vertices are the plane's point ids, maximal faces its line member
/// sets.
SimplicialComplex kq_complex(const plane::Plane& pl);

/// Per-line edge collapses followed by vertex removals; replays to the empty
/// complex.
std::vector<CollapseStep> kq_collapse_sequence(const plane::Plane& pl);

struct VerifyResult {
  bool ok = false;
  bool reached_empty = false;
  std::size_t failed_index = 0;  // valid when !ok and a step was illegal
  std::string reason;
};

VerifyResult verify_sequence(const SimplicialComplex& K,
                             const std::vector<CollapseStep>& steps, int d);

struct SearchResult {
  bool found = false;
  bool budget_exhausted = false;  // NotFound because the node cap was hit
  std::vector<CollapseStep> steps;
  std::size_t nodes_visited = 0;
};

/// Greedy: always collapse the lexicographically smallest legal nonempty
/// sigma. NotFound is inconclusive.
SearchResult search_greedy(const SimplicialComplex& K, int d);

/// Depth-first over collapse choices up to a node limit. NotFound with
/// budget_exhausted == false means no sequence exists.
SearchResult search_backtracking(const SimplicialComplex& K, int d,
                                 std::size_t node_limit);

/// File format: one maximal face per line, sorted vertex ids.
void write_complex(const SimplicialComplex& K, std::ostream& out);
SimplicialComplex read_complex(std::istream& in);

/// Collapse-sequence JSON: [{"sigma": [...], "tau": [...]}, ...].
std::string steps_to_json(const std::vector<CollapseStep>& steps);
std::vector<CollapseStep> steps_from_json(const std::string& text);

}  // namespace planeforge::cx
