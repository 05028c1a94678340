#include "prodcurves/face_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "prodcurves/error.hpp"
#include "prodcurves/simplicial.hpp"

namespace prodcurves {

std::size_t FacePoset::add_cell(std::string label, int dim, std::vector<SignedFace> boundary) {
  if (index_.count(label)) throw Error(ErrorKind::DuplicateId, "cell '" + label + "' already present");
  const std::size_t id = dims_.size();
  for (const auto& f : boundary) {
    if (f.cell >= id) throw Error(ErrorKind::InvalidComplex, "face of '" + label + "' added after the cell");
    if (dims_[f.cell] != dim - 1)
      throw Error(ErrorKind::InvalidComplex, "face '" + labels_[f.cell] + "' of '" + label + "' has wrong dimension");
  }
  for (const auto& f : boundary) cofaces_[f.cell].push_back(id);
  index_.emplace(label, id);
  dims_.push_back(dim);
  labels_.push_back(std::move(label));
  boundary_.push_back(std::move(boundary));
  cofaces_.emplace_back();
  return id;
}

std::optional<std::size_t> FacePoset::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FacePoset::dimension() const {
  int d = -1;
  for (int x : dims_) d = std::max(d, x);
  return d;
}

std::vector<std::size_t> FacePoset::cells_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dims_.size(); ++c)
    if (dims_[c] == k) out.push_back(c);
  return out;
}

std::vector<std::size_t> FacePoset::count_by_dim() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(dimension() + 1), 0);
  for (int d : dims_) ++out[static_cast<std::size_t>(d)];
  return out;
}

std::vector<std::size_t> FacePoset::closure(std::size_t c) const {
  std::set<std::size_t> seen{c};
  std::vector<std::size_t> stack{c};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const auto& f : boundary_[x])
      if (seen.insert(f.cell).second) stack.push_back(f.cell);
  }
  return {seen.begin(), seen.end()};
}

FacePoset FacePoset::restrict_to(const std::vector<bool>& keep, std::vector<std::size_t>* old_index) const {
  FacePoset out;
  std::vector<std::size_t> remap(size(), SIZE_MAX);
  if (old_index) old_index->clear();
  for (std::size_t c = 0; c < size(); ++c) {
    if (!keep[c]) continue;
    std::vector<SignedFace> b;
    for (const auto& f : boundary_[c]) {
      if (remap[f.cell] == SIZE_MAX)
        throw Error(ErrorKind::InvalidComplex, "restriction is not face-closed at '" + labels_[c] + "'");
      b.push_back({remap[f.cell], f.sign});
    }
    remap[c] = out.add_cell(labels_[c], dims_[c], std::move(b));
    if (old_index) old_index->push_back(c);
  }
  return out;
}

std::pair<std::size_t, std::size_t> edge_endpoints(const FacePoset& x, std::size_t edge) {
  auto b = x.boundary(edge);
  if (b.size() != 2) throw Error(ErrorKind::InvalidComplex, "cell '" + x.label(edge) + "' is not an edge");
  return b[0].sign > 0 ? std::pair{b[1].cell, b[0].cell} : std::pair{b[0].cell, b[1].cell};
}

std::size_t add_polygon(FacePoset& x, std::string label, const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 2) throw Error(ErrorKind::InvalidComplex, "polygon '" + label + "' needs two edges");
  auto [t0, h0] = edge_endpoints(x, cycle[0]);
  auto [t1, h1] = edge_endpoints(x, cycle[1]);
  // Start so that the first edge ends where the second begins.
  std::size_t cur = (h0 == t1 || h0 == h1) ? t0 : h0;
  if (cycle.size() == 2) cur = t0;
  const std::size_t start = cur;
  std::vector<SignedFace> b;
  for (auto e : cycle) {
    auto [t, h] = edge_endpoints(x, e);
    if (t == cur) {
      b.push_back({e, 1});
      cur = h;
    } else if (h == cur) {
      b.push_back({e, -1});
      cur = t;
    } else {
      throw Error(ErrorKind::InvalidComplex, "polygon '" + label + "' edges do not chain");
    }
  }
  if (cur != start) throw Error(ErrorKind::InvalidComplex, "polygon '" + label + "' does not close");
  return x.add_cell(std::move(label), 2, std::move(b));
}

std::vector<std::size_t> polygon_vertices(const FacePoset& x, std::size_t face) {
  auto b = x.boundary(face);
  std::vector<bool> used(b.size(), false);
  std::vector<std::size_t> out;
  auto [t, h] = edge_endpoints(x, b[0].cell);
  if (b[0].sign < 0) std::swap(t, h);
  out.push_back(t);
  used[0] = true;
  std::size_t cur = h;
  for (std::size_t step = 1; step < b.size(); ++step) {
    out.push_back(cur);
    bool moved = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      auto [a, c] = edge_endpoints(x, b[i].cell);
      if (a == cur || c == cur) {
        used[i] = true;
        cur = (a == cur) ? c : a;
        moved = true;
        break;
      }
    }
    if (!moved) throw Error(ErrorKind::InvalidComplex, "boundary of '" + x.label(face) + "' is not a cycle");
  }
  if (cur != out.front()) throw Error(ErrorKind::InvalidComplex, "boundary of '" + x.label(face) + "' does not close");
  return out;
}

void validate(const FacePoset& x) {
  auto fail = [&](std::size_t c, const std::string& what) {
    throw Error(ErrorKind::InvalidComplex, "cell '" + x.label(c) + "': " + what);
  };
  for (std::size_t c = 0; c < x.size(); ++c) {
    const int d = x.dim(c);
    auto b = x.boundary(c);
    if (d == 0) {
      if (!b.empty()) fail(c, "vertex with faces");
      continue;
    }
    if (b.empty()) fail(c, "cell of positive dimension without faces");
    std::set<std::size_t> distinct;
    for (const auto& f : b) {
      if (f.sign != 1 && f.sign != -1) fail(c, "incidence sign must be +1 or -1");
      if (!distinct.insert(f.cell).second) fail(c, "repeated face");
    }
    if (d == 1) {
      if (b.size() != 2) fail(c, "edge needs exactly two vertices");
      if (b[0].sign + b[1].sign != 0) fail(c, "edge endpoints need opposite signs");
    }
    if (d == 2) {
      if (b.size() < 2) fail(c, "2-cell boundary too short");
      std::map<std::size_t, int> deg;
      for (const auto& f : b) {
        auto [t, h] = edge_endpoints(x, f.cell);
        ++deg[t];
        ++deg[h];
      }
      for (auto [v, k] : deg)
        if (k != 2) fail(c, "boundary is not a simple cycle at vertex '" + x.label(v) + "'");
      if (polygon_vertices(x, c).size() != b.size()) fail(c, "boundary is not a single cycle");
    }
    if (d >= 2) {
      std::map<std::size_t, long> dd;
      for (const auto& f : b)
        for (const auto& g : x.boundary(f.cell)) dd[g.cell] += static_cast<long>(f.sign) * g.sign;
      for (auto [k, v] : dd)
        if (v != 0) fail(c, "boundary of boundary is nonzero");
    }
  }
}

ProductPoset lower_product(const ProductSubcomplex& m) {
  ProductPoset out;
  std::vector<ProductCell> order(m.cells().begin(), m.cells().end());
  std::stable_sort(order.begin(), order.end(),
                   [](const ProductCell& a, const ProductCell& b) { return cell_dim(a) < cell_dim(b); });
  std::map<ProductCell, std::size_t> index;
  for (const auto& c : order) {
    std::vector<SignedFace> b;
    for (const auto& f : signed_facets(m.factors(), c)) b.push_back({index.at(f.face), f.sign});
    index[c] = out.poset.add_cell(m.label(c), cell_dim(c), std::move(b));
  }
  out.cells = std::move(order);
  return out;
}

FacePoset to_face_poset(const ProductSubcomplex& m) { return lower_product(m).poset; }

SimplicialComplex triangulate(const FacePoset& x) {
  std::vector<std::string> names;
  names.reserve(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) names.push_back(x.label(c));
  std::vector<Simplex> chains;
  std::vector<std::size_t> chain;
  auto descend = [&](auto&& self, std::size_t c) -> void {
    chain.push_back(c);
    auto b = x.boundary(c);
    if (b.empty()) {
      Simplex s = chain;
      std::sort(s.begin(), s.end());
      chains.push_back(std::move(s));
    }
    for (const auto& f : b) self(self, f.cell);
    chain.pop_back();
  };
  for (std::size_t c = 0; c < x.size(); ++c)
    if (x.cofaces(c).empty()) descend(descend, c);
  return SimplicialComplex::from_indexed(std::move(names), chains);
}

std::vector<std::size_t> cell_components(const FacePoset& x, std::size_t* count) {
  std::vector<std::size_t> parent(x.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t c = 0; c < x.size(); ++c)
    for (const auto& f : x.boundary(c)) parent[find(f.cell)] = find(c);
  std::vector<std::size_t> label(x.size());
  std::vector<std::size_t> remap(x.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t c = 0; c < x.size(); ++c) {
    auto r = find(c);
    if (remap[r] == SIZE_MAX) remap[r] = next++;
    label[c] = remap[r];
  }
  if (count) *count = next;
  return label;
}

}  // namespace prodcurves
