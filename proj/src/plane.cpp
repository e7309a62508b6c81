#include "planeforge/plane.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "planeforge/gf.hpp"

namespace planeforge::plane {

namespace {

// All projective triples over GF(q), normalized so the first nonzero
// coordinate is the field's 1, in lexicographic order of the codes.
std::vector<std::array<int, 3>> normalized_triples(int q) {
  std::vector<std::array<int, 3>> out;
  out.reserve(q * q + q + 1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const std::array<int, 3> t{a, b, c};
        int first = 0;
        while (first < 3 && t[first] == 0) ++first;
        if (first == 3) continue;
        if (t[first] != 1) continue;  // 1 is the multiplicative identity code
        out.push_back(t);
      }
  return out;
}

std::pair<int, int> factor_prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!gf::is_prime(p)) continue;
    if (q % p != 0) continue;
    int k = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m == 1) return {p, k};
    break;
  }
  throw UnsupportedOrder("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace

Plane build_plane(int q) {
  if (q < 2) throw UnsupportedOrder("q must be >= 2");
  const auto [p, k] = factor_prime_power(q);
  gf::Field F = gf::Field::make(p, k);

  Plane pl;
  pl.q = q;
  pl.n = q * q + q + 1;
  const auto triples = normalized_triples(q);

  pl.points.resize(pl.n);
  pl.lines.resize(pl.n);
  for (int i = 0; i < pl.n; ++i) {
    pl.points[i] = Point{i, triples[i]};
    pl.lines[i] = Line{i, triples[i], {}};
  }
  pl.point_to_lines.assign(pl.n, {});

  for (int li = 0; li < pl.n; ++li) {
    const auto& l = pl.lines[li].homog;
    for (int pi = 0; pi < pl.n; ++pi) {
      const auto& pt = pl.points[pi].homog;
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = F.add(dot, F.mul(l[c], pt[c]));
      if (dot == 0) {
        pl.lines[li].members.push_back(pi);
        pl.point_to_lines[pi].push_back(li);
      }
    }
  }
  return pl;
}

AxiomReport verify_axioms(const Plane& pl) {
  AxiomReport rep;
  const int n = pl.n;

  rep.line_sizes_ok = true;
  for (const auto& l : pl.lines)
    if (static_cast<int>(l.members.size()) != pl.q + 1) rep.line_sizes_ok = false;

  rep.point_degrees_ok = true;
  for (const auto& incident : pl.point_to_lines)
    if (static_cast<int>(incident.size()) != pl.q + 1) rep.point_degrees_ok = false;

  // (i) every two points span exactly one line.
  rep.two_points_unique_line = true;
  for (int a = 0; a < n && rep.two_points_unique_line; ++a)
    for (int b = a + 1; b < n; ++b) {
      int common = 0;
      const auto& la = pl.point_to_lines[a];
      const auto& lb = pl.point_to_lines[b];
      std::size_t i = 0, j = 0;
      while (i < la.size() && j < lb.size()) {
        if (la[i] == lb[j]) ++common, ++i, ++j;
        else if (la[i] < lb[j]) ++i;
        else ++j;
      }
      if (common != 1) {
        rep.two_points_unique_line = false;
        rep.bad_point_pair = {a, b};
        break;
      }
    }

  // (ii) every two lines meet in exactly one point.
  rep.two_lines_unique_point = true;
  for (int a = 0; a < n && rep.two_lines_unique_point; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& ma = pl.lines[a].members;
      const auto& mb = pl.lines[b].members;
      int common = 0;
      std::size_t i = 0, j = 0;
      while (i < ma.size() && j < mb.size()) {
        if (ma[i] == mb[j]) ++common, ++i, ++j;
        else if (ma[i] < mb[j]) ++i;
        else ++j;
      }
      if (common != 1) {
        rep.two_lines_unique_point = false;
        rep.bad_line_pair = {a, b};
        break;
      }
    }

  return rep;
}

Plane dual(const Plane& pl) {
  if (!verify_axioms(pl).all_pass())
    throw InvalidPlane("dual() requires a plane satisfying all axioms");
  Plane d;
  d.q = pl.q;
  d.n = pl.n;
  d.points.resize(d.n);
  d.lines.resize(d.n);
  d.point_to_lines.assign(d.n, {});
  for (int i = 0; i < d.n; ++i) {
    d.points[i] = Point{i, pl.lines[i].homog};
    d.lines[i] = Line{i, pl.points[i].homog, pl.point_to_lines[i]};
    for (int l : pl.point_to_lines[i]) d.point_to_lines[l].push_back(i);
  }
  for (auto& v : d.point_to_lines) std::sort(v.begin(), v.end());
  return d;
}

void write_incidence(const Plane& pl, std::ostream& out) {
  out << pl.q << ' ' << pl.n << '\n';
  for (const auto& l : pl.lines) {
    for (std::size_t i = 0; i < l.members.size(); ++i) {
      if (i) out << ' ';
      out << l.members[i];
    }
    out << '\n';
  }
}

Plane read_incidence(std::istream& in) {
  Plane pl;
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty incidence file");
  {
    std::istringstream hs(header);
    if (!(hs >> pl.q >> pl.n)) throw ParseError("bad incidence header");
  }
  pl.points.resize(pl.n);
  pl.lines.resize(pl.n);
  pl.point_to_lines.assign(pl.n, {});
  for (int i = 0; i < pl.n; ++i) pl.points[i].id = i;
  for (int li = 0; li < pl.n; ++li) {
    std::string row;
    if (!std::getline(in, row)) throw ParseError("truncated incidence file");
    std::istringstream rs(row);
    Line l;
    l.id = li;
    int pid;
    while (rs >> pid) {
      if (pid < 0 || pid >= pl.n) throw ParseError("point id out of range");
      l.members.push_back(pid);
      pl.point_to_lines[pid].push_back(li);
    }
    if (!std::is_sorted(l.members.begin(), l.members.end()))
      throw ParseError("line members not sorted");
    pl.lines[li] = std::move(l);
  }
  return pl;
}

}  // namespace planeforge::plane
