#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planeforge/plane.hpp"
#include "planeforge/rational.hpp"

namespace planeforge::geometry {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RationalPoint {
  std::vector<Rational> coords;

  bool operator==(const RationalPoint&) const = default;
};

inline bool operator<(const RationalPoint& a, const RationalPoint& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

/// Convex hull of an explicit vertex list.
struct PolytopeV {
  std::vector<RationalPoint> vertices;
};

/// A candidate convex-set representation: one V-polytope per line id.
struct Representation {
  int d = 0;
  std::map<int, PolytopeV> sets;
};

/// Sign (-1, 0, +1) of the orientation determinant of d+1 points in R^d.
int orientation(const std::vector<RationalPoint>& simplex);

struct GeneralPositionResult {
  bool ok = false;
  std::vector<int> witness;  // indices of a degenerate (d+1)-subset
};

/// Exhaustive: no d+1 of the points lie on a common hyperplane.
GeneralPositionResult general_position(const std::vector<RationalPoint>& X, int d);

/// Nonemptiness of the intersection of the hulls, by exact LP feasibility
/// over convex-combination weights. Returns a common point when feasible.
std::optional<RationalPoint> hulls_intersect(const std::vector<PolytopeV>& polys);

bool point_in_hull(const RationalPoint& a, const PolytopeV& poly);

struct MatchReport {
  bool match = false;
  int max_k = 0;  // k-wise checks ran for k = 1..max_k
  // First mismatch, when any.
  std::vector<int> witness_lines;
  bool lines_concurrent = false;  // incidence truth for the witness
  bool hulls_meet = false;        // geometric truth for the witness
  std::uint64_t checks = 0;
};

/// Compares k-wise hull intersections against plane incidence for all
/// k <= d+2 (Helly: that determines the whole pattern).
MatchReport nerve_of_representation(const Representation& rep,
                                    const plane::Plane& pl);

struct SelectionOptions {
  // Cap on arrangement-vertex candidates kept (deterministic prefix of the
  // deduplicated candidate list); 0 means no cap.
  std::size_t max_candidates = 0;
  // Cap on (candidate, partition) transversal-count evaluations.
  std::size_t max_evaluations = 1u << 22;
  bool exhaustive_partitions = false;  // all balanced set partitions, |X| <= 12
};

struct Partition {
  std::vector<std::vector<int>> parts;  // d+1 disjoint index sets into X
};

struct SelectionResult {
  RationalPoint a;
  std::vector<std::vector<int>> parts;  // Z_1..Z_{d+1} as indices into X
  Rational hit_fraction;                // transversals whose hull contains a
  std::vector<RationalPoint> candidates;  // the declared candidate set
  std::uint64_t evaluations = 0;
};

/// Empirical search for a positive-fraction selection point: candidates are
/// the vertices of the line arrangement spanned by X-pairs plus the centroid;
/// partitions are contiguous arcs of the radial order around each candidate.
SelectionResult selection_search(const std::vector<RationalPoint>& X, int d,
                                 const SelectionOptions& opts = {});

/// Exact fraction of transversals of `parts` whose hull contains a.
Rational transversal_hit_fraction(const std::vector<RationalPoint>& X,
                                  const std::vector<std::vector<int>>& parts,
                                  const RationalPoint& a);

/// The partitions selection_search tries for one candidate: every rotation
/// of the radial order around `a`, cut into `num_parts` balanced contiguous
/// arcs (d = 1: every split of the coordinate order into two intervals).
std::vector<std::vector<std::vector<int>>> candidate_partitions(
    const std::vector<RationalPoint>& X, const RationalPoint& a, int d);

struct AuditOptions {
  std::size_t perturbation_rounds = 64;
  SelectionOptions selection;
};

struct AuditReport {
  // Phase 1: nerve check.
  MatchReport nerve;
  bool representation_valid = false;
  // Phase 2: witness points and perturbation.
  bool witness_points_found = false;
  bool general_position_achieved = false;
  std::vector<RationalPoint> witness_points;  // x_p per point id
  // Phase 3: selection.
  bool selection_ran = false;
  std::string selection_skipped_reason;
  SelectionResult selection;
  // Phase 4: lines meeting every part, with exact per-line re-verification.
  std::vector<std::size_t> missed_per_part;      // |M_i|
  int lines_meeting_all_parts = 0;               // |L'|
  int transversal_hulls_containing_a = 0;
  // Phase 5: sets containing a.
  int sets_containing_a = 0;
  bool contradiction = false;  // sets_containing_a > q+1
};

/// The refutation pipeline run as an audit of `rep` against `pl`.
AuditReport audit_representation(const Representation& rep, const plane::Plane& pl,
                                 const AuditOptions& opts = {});

/// JSON {d, sets: {line_id: [[ [num, den], ... per coordinate ], ...]}}.
Representation representation_from_json(const std::string& text);
std::string representation_to_json(const Representation& rep);

std::string audit_report_json(const AuditReport& rep, int q);

}  // namespace planeforge::geometry
