#include "planeforge/geometry.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

#include "planeforge/lp.hpp"

namespace planeforge::geometry {

namespace {

Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return result;
}

int sign(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

// Orientation of (a, b, c) in the plane, used by the radial comparator.
int orient2(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  const Rational v = (b.coords[0] - a.coords[0]) * (c.coords[1] - a.coords[1]) -
                     (b.coords[1] - a.coords[1]) * (c.coords[0] - a.coords[0]);
  return sign(v);
}

bool triangle_contains(const RationalPoint& p, const RationalPoint& q,
                       const RationalPoint& r, const RationalPoint& a) {
  const int s1 = orient2(p, q, a);
  const int s2 = orient2(q, r, a);
  const int s3 = orient2(r, p, a);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

void check_dimension(const std::vector<PolytopeV>& polys) {
  if (polys.empty()) throw DimensionMismatch("no polytopes given");
  std::size_t d = 0;
  bool have = false;
  for (const auto& poly : polys) {
    if (poly.vertices.empty()) throw DimensionMismatch("polytope with no vertices");
    for (const auto& v : poly.vertices) {
      if (!have) {
        d = v.coords.size();
        have = true;
      } else if (v.coords.size() != d) {
        throw DimensionMismatch("polytope vertices of mixed dimension");
      }
    }
  }
}

// All k-subsets of {0..n-1}, in lexicographic order.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return true;
  while (true) {
    if (!fn(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool lines_concurrent(const plane::Plane& pl, const std::vector<int>& line_ids) {
  std::vector<int> common = pl.lines[line_ids[0]].members;
  for (std::size_t i = 1; i < line_ids.size() && !common.empty(); ++i) {
    const auto& m = pl.lines[line_ids[i]].members;
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), m.begin(), m.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  return !common.empty();
}

RationalPoint centroid(const std::vector<RationalPoint>& X) {
  const std::size_t d = X[0].coords.size();
  RationalPoint c;
  c.coords.assign(d, 0);
  for (const auto& x : X)
    for (std::size_t i = 0; i < d; ++i) c.coords[i] += x.coords[i];
  for (auto& v : c.coords) v /= static_cast<int>(X.size());
  return c;
}

// Intersection of the line through (p1, p2) with the line through (p3, p4),
// when unique.
std::optional<RationalPoint> line_line_intersection(const RationalPoint& p1,
                                                    const RationalPoint& p2,
                                                    const RationalPoint& p3,
                                                    const RationalPoint& p4) {
  const Rational a1 = p2.coords[1] - p1.coords[1];
  const Rational b1 = p1.coords[0] - p2.coords[0];
  const Rational c1 = a1 * p1.coords[0] + b1 * p1.coords[1];
  const Rational a2 = p4.coords[1] - p3.coords[1];
  const Rational b2 = p3.coords[0] - p4.coords[0];
  const Rational c2 = a2 * p3.coords[0] + b2 * p3.coords[1];
  const Rational denom = a1 * b2 - a2 * b1;
  if (denom == 0) return std::nullopt;
  RationalPoint out;
  out.coords = {(c1 * b2 - c2 * b1) / denom, (a1 * c2 - a2 * c1) / denom};
  return out;
}

// Radial order of X around a (a distinct from every X point): by half-plane
// first, then by angle via the orientation predicate; collinear rays break
// ties by squared distance, then by index.
std::vector<int> radial_order(const std::vector<RationalPoint>& X,
                              const RationalPoint& a) {
  auto half = [&](int i) {
    const Rational dy = X[i].coords[1] - a.coords[1];
    const Rational dx = X[i].coords[0] - a.coords[0];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  auto dist2 = [&](int i) {
    const Rational dx = X[i].coords[0] - a.coords[0];
    const Rational dy = X[i].coords[1] - a.coords[1];
    return dx * dx + dy * dy;
  };
  std::vector<int> order(X.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const int hi = half(i), hj = half(j);
    if (hi != hj) return hi < hj;
    const int o = orient2(a, X[i], X[j]);
    if (o != 0) return o > 0;
    const Rational di = dist2(i), dj = dist2(j);
    if (di != dj) return di < dj;
    return i < j;
  });
  return order;
}

std::vector<std::vector<int>> balanced_arcs(const std::vector<int>& order,
                                            int parts, int rotation) {
  const int m = static_cast<int>(order.size());
  std::vector<std::vector<int>> out(parts);
  const int base = m / parts, extra = m % parts;
  int pos = rotation;
  for (int i = 0; i < parts; ++i) {
    const int size = base + (i < extra ? 1 : 0);
    for (int s = 0; s < size; ++s) out[i].push_back(order[(pos++) % m]);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace

int orientation(const std::vector<RationalPoint>& simplex) {
  if (simplex.empty()) throw DimensionMismatch("empty simplex");
  const std::size_t d = simplex.size() - 1;
  for (const auto& p : simplex)
    if (p.coords.size() != d)
      throw DimensionMismatch("need d+1 points of dimension d");
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m[i][j] = simplex[i + 1].coords[j] - simplex[0].coords[j];
  return sign(det(std::move(m)));
}

GeneralPositionResult general_position(const std::vector<RationalPoint>& X, int d) {
  GeneralPositionResult res;
  res.ok = for_each_combination(
      static_cast<int>(X.size()), d + 1, [&](const std::vector<int>& idx) {
        std::vector<RationalPoint> simplex;
        for (int i : idx) simplex.push_back(X[i]);
        if (orientation(simplex) == 0) {
          res.witness = idx;
          return false;
        }
        return true;
      });
  return res;
}

std::optional<RationalPoint> hulls_intersect(const std::vector<PolytopeV>& polys) {
  check_dimension(polys);
  const std::size_t d = polys[0].vertices[0].coords.size();
  const std::size_t k = polys.size();
  std::size_t nvars = 0;
  std::vector<std::size_t> offset(k);
  for (std::size_t j = 0; j < k; ++j) {
    offset[j] = nvars;
    nvars += polys[j].vertices.size();
  }
  // Rows: one convexity row per polytope, then d coordinate rows per
  // polytope beyond the first, equating its combination with the first's.
  const std::size_t m = k + d * (k - 1);
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(nvars, 0));
  std::vector<Rational> b(m, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t v = 0; v < polys[j].vertices.size(); ++v)
      A[j][offset[j] + v] = 1;
    b[j] = 1;
  }
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t c = 0; c < d; ++c) {
      auto& row = A[k + (j - 1) * d + c];
      for (std::size_t v = 0; v < polys[j].vertices.size(); ++v)
        row[offset[j] + v] = polys[j].vertices[v].coords[c];
      for (std::size_t v = 0; v < polys[0].vertices.size(); ++v)
        row[offset[0] + v] = -polys[0].vertices[v].coords[c];
    }
  const auto sol = lp::solve_equality_feasibility(A, b);
  if (!sol.feasible) return std::nullopt;
  RationalPoint common;
  common.coords.assign(d, 0);
  for (std::size_t v = 0; v < polys[0].vertices.size(); ++v)
    for (std::size_t c = 0; c < d; ++c)
      common.coords[c] += sol.x[offset[0] + v] * polys[0].vertices[v].coords[c];
  return common;
}

bool point_in_hull(const RationalPoint& a, const PolytopeV& poly) {
  check_dimension({poly});
  const std::size_t d = a.coords.size();
  if (poly.vertices[0].coords.size() != d)
    throw DimensionMismatch("point and polytope dimensions differ");
  const std::size_t nv = poly.vertices.size();
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(nv));
  std::vector<Rational> b(d + 1);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t v = 0; v < nv; ++v) A[c][v] = poly.vertices[v].coords[c];
    b[c] = a.coords[c];
  }
  for (std::size_t v = 0; v < nv; ++v) A[d][v] = 1;
  b[d] = 1;
  return lp::solve_equality_feasibility(A, b).feasible;
}

MatchReport nerve_of_representation(const Representation& rep,
                                    const plane::Plane& pl) {
  for (const auto& l : pl.lines)
    if (!rep.sets.count(l.id))
      throw std::invalid_argument("representation misses line " +
                                  std::to_string(l.id));
  MatchReport report;
  report.max_k = std::min(rep.d + 2, pl.n);
  for (int k = 1; k <= report.max_k; ++k) {
    const bool done = for_each_combination(pl.n, k, [&](const std::vector<int>& ids) {
      ++report.checks;
      const bool truth = lines_concurrent(pl, ids);
      std::vector<PolytopeV> polys;
      for (int id : ids) polys.push_back(rep.sets.at(id));
      const bool geom = hulls_intersect(polys).has_value();
      if (truth != geom) {
        report.witness_lines = ids;
        report.lines_concurrent = truth;
        report.hulls_meet = geom;
        return false;
      }
      return true;
    });
    if (!done) return report;
  }
  report.match = true;
  return report;
}

Rational transversal_hit_fraction(const std::vector<RationalPoint>& X,
                                  const std::vector<std::vector<int>>& parts,
                                  const RationalPoint& a) {
  const int d = static_cast<int>(a.coords.size());
  BigInt total = 1;
  for (const auto& z : parts) total *= static_cast<int>(z.size());
  if (total == 0) return 0;

  BigInt hits = 0;
  std::vector<int> pick(parts.size(), 0);
  while (true) {
    bool contained;
    if (d == 1) {
      Rational lo = X[parts[0][pick[0]]].coords[0], hi = lo;
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const Rational& v = X[parts[i][pick[i]]].coords[0];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      contained = (lo <= a.coords[0] && a.coords[0] <= hi);
    } else if (d == 2 && parts.size() == 3) {
      contained = triangle_contains(X[parts[0][pick[0]]], X[parts[1][pick[1]]],
                                    X[parts[2][pick[2]]], a);
    } else {
      PolytopeV hull;
      for (std::size_t i = 0; i < parts.size(); ++i)
        hull.vertices.push_back(X[parts[i][pick[i]]]);
      contained = point_in_hull(a, hull);
    }
    if (contained) ++hits;
    std::size_t i = 0;
    while (i < parts.size() && pick[i] + 1 == static_cast<int>(parts[i].size()))
      pick[i++] = 0;
    if (i == parts.size()) break;
    ++pick[i];
  }
  return Rational(hits, total);
}

std::vector<std::vector<std::vector<int>>> candidate_partitions(
    const std::vector<RationalPoint>& X, const RationalPoint& a, int d) {
  const int m = static_cast<int>(X.size());
  std::vector<std::vector<std::vector<int>>> out;
  if (d == 1) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      if (X[i].coords[0] != X[j].coords[0]) return X[i].coords[0] < X[j].coords[0];
      return i < j;
    });
    for (int split = 1; split < m; ++split) {
      std::vector<std::vector<int>> parts(2);
      parts[0].assign(order.begin(), order.begin() + split);
      parts[1].assign(order.begin() + split, order.end());
      std::sort(parts[0].begin(), parts[0].end());
      std::sort(parts[1].begin(), parts[1].end());
      out.push_back(std::move(parts));
    }
  } else {
    const auto order = radial_order(X, a);
    for (int rot = 0; rot < m; ++rot) out.push_back(balanced_arcs(order, 3, rot));
  }
  return out;
}

SelectionResult selection_search(const std::vector<RationalPoint>& X, int d,
                                 const SelectionOptions& opts) {
  if (d != 1 && d != 2)
    throw DimensionUnsupported("selection search supports d in {1, 2}");
  if (X.size() < static_cast<std::size_t>(d + 1))
    throw std::invalid_argument("need at least d+1 points");

  // Candidate points: the centroid plus (deduplicated, sorted) arrangement
  // vertices of the lines spanned by X-pairs; in R^1, pair midpoints.
  std::set<RationalPoint> arrangement;
  const std::set<RationalPoint> xset(X.begin(), X.end());
  const int m = static_cast<int>(X.size());
  if (d == 1) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        RationalPoint mid;
        mid.coords = {(X[i].coords[0] + X[j].coords[0]) / 2};
        if (!xset.count(mid)) arrangement.insert(std::move(mid));
      }
  } else {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    for (std::size_t s = 0; s < pairs.size(); ++s)
      for (std::size_t t = s + 1; t < pairs.size(); ++t) {
        const auto pt = line_line_intersection(X[pairs[s].first], X[pairs[s].second],
                                               X[pairs[t].first], X[pairs[t].second]);
        if (pt && !xset.count(*pt)) arrangement.insert(*pt);
      }
  }
  SelectionResult best;
  best.candidates.push_back(centroid(X));
  for (const auto& pt : arrangement) {
    if (opts.max_candidates && best.candidates.size() >= opts.max_candidates) break;
    best.candidates.push_back(pt);
  }
  if (xset.count(best.candidates.front()))
    best.candidates.erase(best.candidates.begin());

  best.hit_fraction = -1;
  std::uint64_t evaluations = 0;
  auto consider = [&](const RationalPoint& a,
                      const std::vector<std::vector<int>>& parts) {
    if (++evaluations > opts.max_evaluations)
      throw BudgetExceeded("selection evaluation budget exceeded");
    const Rational frac = transversal_hit_fraction(X, parts, a);
    if (frac > best.hit_fraction) {
      best.hit_fraction = frac;
      best.a = a;
      best.parts = parts;
    }
  };

  for (const auto& a : best.candidates) {
    if (opts.exhaustive_partitions) {
      if (m > 12)
        throw BudgetExceeded("exhaustive partitions limited to |X| <= 12");
      // Every assignment of indices to the d+1 parts, all parts nonempty.
      std::vector<int> assign(m, 0);
      while (true) {
        std::vector<std::vector<int>> parts(d + 1);
        for (int i = 0; i < m; ++i) parts[assign[i]].push_back(i);
        bool all_nonempty = true;
        for (const auto& z : parts) all_nonempty = all_nonempty && !z.empty();
        if (all_nonempty) consider(a, parts);
        int i = m - 1;
        while (i >= 0 && assign[i] == d) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
      }
    } else {
      for (const auto& parts : candidate_partitions(X, a, d)) consider(a, parts);
    }
  }
  best.evaluations = evaluations;
  return best;
}

AuditReport audit_representation(const Representation& rep, const plane::Plane& pl,
                                 const AuditOptions& opts) {
  AuditReport report;

  // Phase 1: the nerve must reproduce the plane's incidence pattern.
  report.nerve = nerve_of_representation(rep, pl);
  report.representation_valid = report.nerve.match;
  if (!report.representation_valid) return report;

  // Phase 2: a witness point x_p in the intersection of the sets of the
  // lines through each point p.
  std::vector<RationalPoint> X(pl.n);
  report.witness_points_found = true;
  for (int p = 0; p < pl.n; ++p) {
    std::vector<PolytopeV> through;
    for (int l : pl.point_to_lines[p]) through.push_back(rep.sets.at(l));
    const auto x = hulls_intersect(through);
    if (!x) {
      report.witness_points_found = false;
      return report;
    }
    X[p] = *x;
  }

  // Deterministic perturbation toward general position: coordinate i of x_p
  // is shifted by eps / 2^(p*d + i), with eps halved until both general
  // position and membership in every incident set survive.
  auto perturbed = [&](const Rational& eps) {
    std::vector<RationalPoint> Y = X;
    for (int p = 0; p < pl.n; ++p)
      for (int i = 0; i < rep.d; ++i)
        Y[p].coords[i] += eps / (Rational(BigInt(1) << (p * rep.d + i)));
    return Y;
  };
  auto admissible = [&](const std::vector<RationalPoint>& Y) {
    if (!general_position(Y, rep.d).ok) return false;
    for (int p = 0; p < pl.n; ++p)
      for (int l : pl.point_to_lines[p])
        if (!point_in_hull(Y[p], rep.sets.at(l))) return false;
    return true;
  };
  if (admissible(X)) {
    report.general_position_achieved = true;
  } else {
    Rational eps = 1;
    for (std::size_t round = 0; round < opts.perturbation_rounds; ++round) {
      const auto Y = perturbed(eps);
      if (admissible(Y)) {
        X = Y;
        report.general_position_achieved = true;
        break;
      }
      eps /= 2;
    }
  }
  report.witness_points = X;

  // Phase 3: selection.
  if (rep.d > 2) {
    report.selection_skipped_reason = "DimensionUnsupported";
    return report;
  }
  if (!report.general_position_achieved) {
    report.selection_skipped_reason = "general position not achieved";
    return report;
  }
  report.selection = selection_search(X, rep.d, opts.selection);
  report.selection_ran = true;

  // Phase 4: parts P_i from Z_i, missed lines M_i, and the lines whose
  // transversal hull contains a (re-verified per line by point-in-hull LP).
  const auto& parts = report.selection.parts;
  report.missed_per_part.assign(parts.size(), 0);
  for (const auto& l : pl.lines) {
    std::vector<int> reps;
    bool meets_all = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int found = -1;
      for (int p : l.members)
        if (std::binary_search(parts[i].begin(), parts[i].end(), p)) {
          found = p;
          break;
        }
      if (found < 0) {
        ++report.missed_per_part[i];
        meets_all = false;
      } else {
        reps.push_back(found);
      }
    }
    if (!meets_all) continue;
    ++report.lines_meeting_all_parts;
    PolytopeV hull;
    for (int p : reps) hull.vertices.push_back(X[p]);
    if (point_in_hull(report.selection.a, hull))
      ++report.transversal_hulls_containing_a;
  }

  // Phase 5: how many of the sets contain a.
  for (const auto& [id, poly] : rep.sets)
    if (point_in_hull(report.selection.a, poly)) ++report.sets_containing_a;
  report.contradiction = report.sets_containing_a > pl.q + 1;
  return report;
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  return Rational(BigInt(j.at(0).get<std::string>()),
                  BigInt(j.at(1).get<std::string>()));
}

nlohmann::ordered_json rational_pair(const Rational& r) {
  return {boost::multiprecision::numerator(r).str(),
          boost::multiprecision::denominator(r).str()};
}

nlohmann::ordered_json point_json(const RationalPoint& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : p.coords) out.push_back(rational_pair(c));
  return out;
}

}  // namespace

Representation representation_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Representation rep;
  rep.d = j.at("d").get<int>();
  for (const auto& [key, verts] : j.at("sets").items()) {
    PolytopeV poly;
    for (const auto& vj : verts) {
      RationalPoint pt;
      for (const auto& cj : vj) {
        // Accept [num, den] pairs as strings or plain integers.
        if (cj.is_array() && cj.size() == 2 && cj[0].is_string())
          pt.coords.push_back(rational_from_json(cj));
        else
          pt.coords.push_back(
              Rational(cj.at(0).get<long long>(), cj.at(1).get<long long>()));
      }
      if (static_cast<int>(pt.coords.size()) != rep.d)
        throw DimensionMismatch("vertex dimension differs from d");
      poly.vertices.push_back(std::move(pt));
    }
    rep.sets[std::stoi(key)] = std::move(poly);
  }
  return rep;
}

std::string representation_to_json(const Representation& rep) {
  nlohmann::ordered_json j;
  j["d"] = rep.d;
  j["sets"] = nlohmann::ordered_json::object();
  for (const auto& [id, poly] : rep.sets) {
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : poly.vertices) verts.push_back(point_json(v));
    j["sets"][std::to_string(id)] = verts;
  }
  return j.dump(2);
}

std::string audit_report_json(const AuditReport& rep, int q) {
  nlohmann::ordered_json j;
  j["nerve"] = {{"match", rep.nerve.match},
                {"max_k", rep.nerve.max_k},
                {"checks", rep.nerve.checks}};
  if (!rep.nerve.match) {
    j["nerve"]["witness"] = {{"lines", rep.nerve.witness_lines},
                             {"lines_concurrent", rep.nerve.lines_concurrent},
                             {"hulls_meet", rep.nerve.hulls_meet}};
  }
  j["representation_valid"] = rep.representation_valid;
  if (!rep.representation_valid) return j.dump(2);

  j["witness_points_found"] = rep.witness_points_found;
  j["general_position_achieved"] = rep.general_position_achieved;
  j["selection_ran"] = rep.selection_ran;
  if (!rep.selection_ran) {
    j["selection_skipped_reason"] = rep.selection_skipped_reason;
    return j.dump(2);
  }
  j["selection"] = {{"a", point_json(rep.selection.a)},
                    {"parts", rep.selection.parts},
                    {"hit_fraction", rational_pair(rep.selection.hit_fraction)},
                    {"candidates_tried", rep.selection.candidates.size()},
                    {"evaluations", rep.selection.evaluations}};
  j["missed_per_part"] = rep.missed_per_part;
  j["lines_meeting_all_parts"] = rep.lines_meeting_all_parts;
  j["transversal_hulls_containing_a"] = rep.transversal_hulls_containing_a;
  j["sets_containing_a"] = rep.sets_containing_a;
  j["incidence_cap"] = q + 1;
  j["contradiction"] = rep.contradiction;
  return j.dump(2);
}

}  // namespace planeforge::geometry
