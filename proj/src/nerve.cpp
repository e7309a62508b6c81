#include "planeforge/nerve.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace planeforge::nerve {

cx::SimplicialComplex nerve_of(const SetFamily& fam) {
  // Star of each ground element; deduplicate before downward closure.
  std::set<cx::Face> stars;
  for (int x : fam.ground) {
    cx::Face star;
    for (std::size_t i = 0; i < fam.members.size(); ++i)
      if (std::binary_search(fam.members[i].elems.begin(),
                             fam.members[i].elems.end(), x))
        star.push_back(static_cast<int>(i));
    if (!star.empty()) stars.insert(std::move(star));
  }
  // Sets not covered by any star still contribute their vertex.
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    stars.insert({static_cast<int>(i)});
  return cx::SimplicialComplex::from_maximal(
      std::vector<cx::Face>(stars.begin(), stars.end()));
}

SetFamily simplex_representation_family(const plane::Plane& pl) {
  SetFamily fam;
  fam.ground.resize(pl.n);
  for (int i = 0; i < pl.n; ++i) fam.ground[i] = i;
  for (const auto& l : pl.lines)
    fam.members.push_back({"line" + std::to_string(l.id), l.members});
  return fam;
}

bool nerve_equals(const cx::SimplicialComplex& K1, const cx::SimplicialComplex& K2,
                  const std::map<int, int>& relabel) {
  std::set<int> images;
  for (const auto& [from, to] : relabel)
    if (!images.insert(to).second)
      throw LabelMismatch("relabeling is not injective at " + std::to_string(to));
  std::set<cx::Face> mapped;
  for (const auto& f : K1.faces()) {
    cx::Face g;
    for (int v : f) {
      const auto it = relabel.find(v);
      if (it == relabel.end())
        throw LabelMismatch("vertex " + std::to_string(v) + " has no image");
      g.push_back(it->second);
    }
    std::sort(g.begin(), g.end());
    mapped.insert(std::move(g));
  }
  return mapped == K2.faces();
}

SetFamily read_family(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw plane::ParseError("empty family file");
  int a = 0, m = 0;
  {
    std::istringstream hs(header);
    if (!(hs >> a >> m)) throw plane::ParseError("bad family header");
  }
  SetFamily fam;
  std::set<int> ground;
  for (int i = 0; i < m; ++i) {
    std::string row;
    if (!std::getline(in, row)) throw plane::ParseError("truncated family file");
    std::istringstream rs(row);
    NamedSet s;
    s.name = "set" + std::to_string(i);
    int x;
    while (rs >> x) {
      s.elems.push_back(x);
      ground.insert(x);
    }
    if (s.elems.empty()) throw plane::ParseError("empty set in family file");
    std::sort(s.elems.begin(), s.elems.end());
    fam.members.push_back(std::move(s));
  }
  fam.ground.assign(ground.begin(), ground.end());
  return fam;
}

void write_family(const SetFamily& fam, std::ostream& out) {
  out << fam.ground.size() << ' ' << fam.members.size() << '\n';
  for (const auto& s : fam.members) {
    for (std::size_t i = 0; i < s.elems.size(); ++i) {
      if (i) out << ' ';
      out << s.elems[i];
    }
    out << '\n';
  }
}

}  // namespace planeforge::nerve
