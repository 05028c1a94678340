#include "prodcurves/simplicial.hpp"

#include <algorithm>
#include <map>

#include "prodcurves/error.hpp"

namespace prodcurves {

std::vector<Simplex> faces_of(const Simplex& s) {
  if (s.size() > 20) throw Error(ErrorKind::InvalidComplex, "simplex too large");
  std::vector<Simplex> out;
  const std::size_t n = s.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> names;
  for (const auto& f : facets) names.insert(names.end(), f.begin(), f.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  std::vector<Simplex> idx;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& v : f) s.push_back(index.at(v));
    idx.push_back(std::move(s));
  }
  return from_indexed(std::move(names), idx);
}

SimplicialComplex SimplicialComplex::from_indexed(std::vector<std::string> names, const std::vector<Simplex>& facets) {
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::size_t> rank(names.size());
  SimplicialComplex k;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    k.names_.push_back(names[order[i]]);
  }
  for (std::size_t i = 1; i < k.names_.size(); ++i)
    if (k.names_[i] == k.names_[i - 1]) throw Error(ErrorKind::DuplicateId, "vertex '" + k.names_[i] + "' repeated");
  for (const auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::InvalidComplex, "empty simplex");
    Simplex s;
    for (auto v : f) {
      if (v >= rank.size()) throw Error(ErrorKind::InvalidComplex, "simplex vertex out of range");
      s.push_back(rank[v]);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorKind::InvalidComplex, "simplex with a repeated vertex");
    if (k.simplices_.count(s)) continue;
    for (auto& face : faces_of(s)) k.simplices_.insert(std::move(face));
  }
  return k;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::set<Simplex> proper;
  for (const auto& s : simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      proper.insert(std::move(f));
    }
  }
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (!proper.count(s)) out.push_back(s);
  return out;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += names_.at(s[i]);
  }
  return out + "}";
}

std::size_t SimplicialComplex::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) throw Error(ErrorKind::UnknownName, "no vertex '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  SimplicialComplex out;
  out.names_ = names_;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) <= k + 1) out.simplices_.insert(s);
  return out;
}

FacePoset to_face_poset(const SimplicialComplex& k) {
  std::vector<Simplex> order(k.simplices().begin(), k.simplices().end());
  std::stable_sort(order.begin(), order.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  FacePoset out;
  std::map<Simplex, std::size_t> index;
  for (const auto& s : order) {
    std::vector<SignedFace> b;
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        b.push_back({index.at(f), i % 2 == 0 ? 1 : -1});
      }
    }
    index[s] = out.add_cell(k.label(s), static_cast<int>(s.size()) - 1, std::move(b));
  }
  return out;
}

SimplicialComplex to_simplicial(const Graph& g) {
  std::map<std::pair<std::size_t, std::size_t>, int> multiplicity;
  for (const auto& e : g.edges()) ++multiplicity[std::minmax(e.tail, e.head)];
  std::vector<std::string> names(g.vertices().begin(), g.vertices().end());
  std::vector<Simplex> facets;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) facets.push_back({v});
  for (const auto& e : g.edges()) {
    if (multiplicity[std::minmax(e.tail, e.head)] == 1) {
      facets.push_back({e.tail, e.head});
      continue;
    }
    names.push_back(e.id);
    const std::size_t mid = names.size() - 1;
    facets.push_back({e.tail, mid});
    facets.push_back({mid, e.head});
  }
  return SimplicialComplex::from_indexed(std::move(names), facets);
}

}  // namespace prodcurves
