#include "planeforge/complex.hpp"

#include <algorithm>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace planeforge::cx {

namespace {

bool is_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

}  // namespace

void SimplicialComplex::insert_closed(const Face& f) {
  const std::size_t m = f.size();
  if (m >= 24) throw TooLarge("face " + face_str(f) + " too large to close");
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    Face sub;
    for (std::size_t i = 0; i < m; ++i)
      if (bits >> i & 1) sub.push_back(f[i]);
    faces_.insert(std::move(sub));
    if (faces_.size() > kMaxFaces) throw TooLarge("face count exceeds 2^24");
  }
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Face>& maximal) {
  SimplicialComplex K;
  for (Face f : maximal) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    K.insert_closed(f);
  }
  return K;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> vs;
  for (const auto& f : faces_)
    if (f.size() == 1) vs.push_back(f[0]);
  return vs;
}

std::vector<Face> SimplicialComplex::maximal_faces() const {
  const auto vs = vertices();
  std::vector<Face> out;
  for (const auto& f : faces_) {
    bool maximal = true;
    for (int v : vs) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (faces_.count(g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Face> SimplicialComplex::maximal_cofaces(const Face& sigma) const {
  const auto vs = vertices();
  std::vector<Face> out;
  for (const auto& f : faces_) {
    if (!is_subset(sigma, f)) continue;
    bool maximal = true;
    for (int v : vs) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (faces_.count(g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::is_downward_closed() const {
  for (const auto& f : faces_) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + i);
      if (!faces_.count(g)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> counts;
  for (const auto& f : faces_) {
    if (counts.size() <= f.size()) counts.resize(f.size() + 1, 0);
    ++counts[f.size()];
  }
  return counts;
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  std::size_t best = 0;
  for (const auto& f : faces_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

CollapseCheck legal_collapse(const SimplicialComplex& K, const Face& sigma, int d) {
  if (!K.contains(sigma))
    throw FaceNotInComplex("face " + face_str(sigma) + " not in complex");
  CollapseCheck check;
  // (i) dim sigma <= d-1, i.e. |sigma| <= d.
  if (static_cast<int>(sigma.size()) > d) {
    check.failed_condition = 1;
    check.reason = "condition (i): dim " + face_str(sigma) + " exceeds d-1";
    return check;
  }
  // (ii)+(iii): inclusion-maximal cofaces of sigma. There is always at least
  // one since sigma itself is a face.
  const auto cofaces = K.maximal_cofaces(sigma);
  // (iv) uniqueness.
  if (cofaces.size() != 1) {
    check.failed_condition = 4;
    check.reason = "condition (iv): " + std::to_string(cofaces.size()) +
                   " maximal cofaces of " + face_str(sigma);
    return check;
  }
  check.legal = true;
  check.tau = cofaces.front();
  return check;
}

SimplicialComplex apply_collapse(const SimplicialComplex& K, const Face& sigma,
                                 const Face& tau) {
  if (!K.contains(sigma))
    throw FaceNotInComplex("face " + face_str(sigma) + " not in complex");
  const auto cofaces = K.maximal_cofaces(sigma);
  if (cofaces.size() != 1 || cofaces.front() != tau)
    throw IllegalStep("(" + face_str(sigma) + ", " + face_str(tau) +
                      ") is not a legal collapse pair");
  SimplicialComplex out = K;
  // Remove the interval [sigma, tau].
  Face extra;
  for (int v : tau)
    if (!std::binary_search(sigma.begin(), sigma.end(), v)) extra.push_back(v);
  for (std::uint32_t bits = 0; bits < (1u << extra.size()); ++bits) {
    Face f = sigma;
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (bits >> i & 1) f.push_back(extra[i]);
    std::sort(f.begin(), f.end());
    out.erase(f);
  }
  return out;
}

SimplicialComplex full_simplex(int d) {
  Face all(d + 1);
  for (int i = 0; i <= d; ++i) all[i] = i + 1;
  return SimplicialComplex::from_maximal({all});
}

std::vector<CollapseStep> simplex_collapse_sequence(int d) {
  SimplicialComplex K = full_simplex(d);
  std::vector<CollapseStep> steps;
  for (int i = 1; i <= d + 1; ++i)
    for (int j = i + 1; j <= d + 1; ++j) {
      const Face sigma{i, j};
      const auto check = legal_collapse(K, sigma, 2);
      if (!check.legal) throw IllegalStep("simplex sequence stuck: " + check.reason);
      steps.push_back({sigma, check.tau});
      K = apply_collapse(K, sigma, check.tau);
    }
  return steps;
}

std::vector<CollapseStep> vertex_removal_steps(const SimplicialComplex& K) {
  std::vector<CollapseStep> steps;
  for (int v : K.vertices()) steps.push_back({{v}, {v}});
  return steps;
}

SimplicialComplex kq_complex(const plane::Plane& pl) {
  if (pl.q > 5) throw TooLarge("explicit K_q storage limited to q <= 5");
  std::vector<Face> maximal;
  maximal.reserve(pl.lines.size());
  for (const auto& l : pl.lines) maximal.push_back(l.members);
  return SimplicialComplex::from_maximal(maximal);
}

std::vector<CollapseStep> kq_collapse_sequence(const plane::Plane& pl) {
  SimplicialComplex K = kq_complex(pl);
  std::vector<CollapseStep> steps;
  // Edges inside one line have cofaces only inside that line's simplex
  // (two points span a unique line), so the per-line order of
  // simplex_collapse_sequence stays legal in the whole complex.
  for (const auto& l : pl.lines) {
    const auto& m = l.members;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const Face sigma{m[i], m[j]};
        const auto check = legal_collapse(K, sigma, 2);
        if (!check.legal) throw IllegalStep("K_q sequence stuck: " + check.reason);
        steps.push_back({sigma, check.tau});
        K = apply_collapse(K, sigma, check.tau);
      }
  }
  for (const auto& step : vertex_removal_steps(K)) {
    steps.push_back(step);
    K = apply_collapse(K, step.sigma, step.tau);
  }
  if (!K.empty()) throw IllegalStep("K_q sequence did not reach the empty complex");
  return steps;
}

VerifyResult verify_sequence(const SimplicialComplex& K,
                             const std::vector<CollapseStep>& steps, int d) {
  SimplicialComplex cur = K;
  VerifyResult res;
  for (std::size_t idx = 0; idx < steps.size(); ++idx) {
    const auto& step = steps[idx];
    if (!cur.contains(step.sigma)) {
      res.failed_index = idx;
      res.reason = "sigma " + face_str(step.sigma) + " not in complex";
      return res;
    }
    const auto check = legal_collapse(cur, step.sigma, d);
    if (!check.legal) {
      res.failed_index = idx;
      res.reason = check.reason;
      return res;
    }
    if (check.tau != step.tau) {
      res.failed_index = idx;
      res.reason = "claimed tau " + face_str(step.tau) + " differs from actual " +
                   face_str(check.tau);
      return res;
    }
    cur = apply_collapse(cur, step.sigma, step.tau);
  }
  res.reached_empty = cur.empty();
  res.ok = res.reached_empty;
  if (!res.ok) {
    res.failed_index = steps.size();
    res.reason = "sequence ends with " + std::to_string(cur.face_count()) +
                 " faces remaining";
  }
  return res;
}

SearchResult search_greedy(const SimplicialComplex& K, int d) {
  SimplicialComplex cur = K;
  SearchResult res;
  while (!cur.empty()) {
    bool advanced = false;
    for (const auto& sigma : cur.faces()) {
      if (sigma.empty() || static_cast<int>(sigma.size()) > d) continue;
      const auto check = legal_collapse(cur, sigma, d);
      if (!check.legal) continue;
      res.steps.push_back({sigma, check.tau});
      cur = apply_collapse(cur, sigma, check.tau);
      ++res.nodes_visited;
      advanced = true;
      break;
    }
    if (!advanced) return res;  // found == false, inconclusive
  }
  res.found = true;
  return res;
}

namespace {

bool backtrack(const SimplicialComplex& cur, int d, std::size_t node_limit,
               SearchResult& res) {
  if (cur.empty()) return true;
  if (++res.nodes_visited > node_limit)
    throw BudgetExceeded("backtracking node limit exceeded");
  for (const auto& sigma : cur.faces()) {
    if (sigma.empty() || static_cast<int>(sigma.size()) > d) continue;
    const auto check = legal_collapse(cur, sigma, d);
    if (!check.legal) continue;
    res.steps.push_back({sigma, check.tau});
    if (backtrack(apply_collapse(cur, sigma, check.tau), d, node_limit, res))
      return true;
    res.steps.pop_back();
  }
  return false;
}

}  // namespace

SearchResult search_backtracking(const SimplicialComplex& K, int d,
                                 std::size_t node_limit) {
  SearchResult res;
  res.found = backtrack(K, d, node_limit, res);
  return res;
}

void write_complex(const SimplicialComplex& K, std::ostream& out) {
  for (const auto& f : K.maximal_faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << f[i];
    }
    out << '\n';
  }
}

SimplicialComplex read_complex(std::istream& in) {
  std::vector<Face> maximal;
  std::string row;
  while (std::getline(in, row)) {
    if (row.empty()) continue;
    std::istringstream rs(row);
    Face f;
    int v;
    while (rs >> v) f.push_back(v);
    maximal.push_back(std::move(f));
  }
  return SimplicialComplex::from_maximal(maximal);
}

std::string steps_to_json(const std::vector<CollapseStep>& steps) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& s : steps) j.push_back({{"sigma", s.sigma}, {"tau", s.tau}});
  return j.dump(2);
}

std::vector<CollapseStep> steps_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<CollapseStep> steps;
  for (const auto& item : j) {
    CollapseStep s;
    s.sigma = item.at("sigma").get<Face>();
    s.tau = item.at("tau").get<Face>();
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace planeforge::cx
