#include "prodcurves/fibers.hpp"

#include <algorithm>

#include "prodcurves/algebra.hpp"
#include "prodcurves/error.hpp"

namespace prodcurves {

IndexSet::IndexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool IndexSet::contains(std::size_t j) const { return std::binary_search(members_.begin(), members_.end(), j); }

IndexSet IndexSet::complement(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!contains(i)) out.push_back(i);
  return IndexSet(std::move(out));
}

ProductCell restrict_cell(const ProductCell& c, const IndexSet& j) {
  ProductCell out;
  for (auto i : j.members()) out.push_back(c.at(i));
  return out;
}

ProductCell merge_cell(const ProductCell& a, const IndexSet& j, const ProductCell& b) {
  ProductCell out(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = j.contains(i) ? a.at(ia++) : b.at(ib++);
  return out;
}

namespace {

FactorsPtr sub_factors(const ProductSubcomplex& m, const IndexSet& j) {
  Factors f;
  for (auto i : j.members()) f.push_back(m.factors().at(i));
  return std::make_shared<const Factors>(std::move(f));
}

void check_index_set(const ProductSubcomplex& m, const IndexSet& j) {
  if (j.empty()) throw Error(ErrorKind::EmptyIndexSet, "index set is empty");
  if (j.members().back() >= m.arity())
    throw Error(ErrorKind::BadCoordinate, "index " + std::to_string(j.members().back() + 1) + " exceeds " +
                                              std::to_string(m.arity()) + " factors");
}

}  // namespace

ProductSubcomplex project(const ProductSubcomplex& m, const IndexSet& j) {
  check_index_set(m, j);
  CellSet cells;
  for (const auto& c : m.cells()) cells.insert(restrict_cell(c, j));
  return ProductSubcomplex(sub_factors(m, j), std::move(cells));
}

ProductSubcomplex fiber_complex(const ProductSubcomplex& m, const ProductCell& tau, const IndexSet& j) {
  check_index_set(m, j);
  const IndexSet jc = j.complement(m.arity());
  if (tau.size() != jc.size())
    throw Error(ErrorKind::BadCoordinate, "base cell has " + std::to_string(tau.size()) + " coordinates, expected " +
                                              std::to_string(jc.size()));
  bool in_projection = false;
  CellSet tops;
  for (const auto& c : m.cells()) {
    if (restrict_cell(c, jc) != tau) continue;
    in_projection = true;
    auto s = restrict_cell(c, j);
    if (cell_dim(s) == static_cast<int>(j.size())) tops.insert(std::move(s));
  }
  if (!in_projection) throw Error(ErrorKind::CellNotInProjection, "base cell is not in the projection");
  auto f = sub_factors(m, j);
  auto closed = face_closure(*f, tops);
  return ProductSubcomplex(std::move(f), std::move(closed));
}

FiberReport fiber(const ProductSubcomplex& m, const ProductCell& tau, const IndexSet& j) {
  FiberReport r{tau, fiber_complex(m, tau, j), {}};
  for (const auto& part : components(r.fiber)) {
    auto x = to_face_poset(part);
    ComponentProfile p{classify(x, static_cast<int>(j.size())), 0};
    auto h = homology_summary(x);
    p.b1 = h.betti.size() > 1 ? h.betti[1] : 0;
    r.component_profiles.push_back(std::move(p));
  }
  return r;
}

CellSet combine(const ProductSubcomplex& a, const IndexSet& j, const ProductSubcomplex& b) {
  CellSet out;
  for (const auto& x : a.cells())
    for (const auto& y : b.cells()) out.insert(merge_cell(x, j, y));
  return out;
}

long first_betti(const ProductSubcomplex& m) {
  auto h = homology_summary(to_face_poset(m));
  return h.betti.size() > 1 ? h.betti[1] : 0;
}

namespace {

bool projection_is_circle(const ProductSubcomplex& m, std::size_t j) {
  return graph_profile(as_graph(project(m, IndexSet{j}))).is_circle;
}

void require_ramified(const ProductSubcomplex& m) {
  if (m.arity() == 0 || !classify(m, static_cast<int>(m.arity())).ramified)
    throw Error(ErrorKind::NotRamified, "subcomplex is not a ramified " + std::to_string(m.arity()) + "-manifold");
}

std::vector<ProductCell> base_vertices(const ProductSubcomplex& m, const IndexSet& jc) {
  if (jc.empty()) return {ProductCell{}};
  return project(m, jc).cells_of_dim(0);
}

}  // namespace

IndexSet circle_directions(const ProductSubcomplex& m) {
  require_ramified(m);
  const std::size_t n = m.arity();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j) {
    const bool circle = projection_is_circle(m, j);
    if (circle) out.push_back(j);
    // Fibers over vertices are circles exactly when the projection is; the
    // converse direction needs a connected base.
    const IndexSet jc = IndexSet{j}.complement(n);
    bool all_fibers_circles = true;
    for (const auto& v : base_vertices(m, jc))
      if (!graph_profile(as_graph(fiber_complex(m, v, IndexSet{j}))).is_circle) all_fibers_circles = false;
    bool base_connected = jc.empty() || components(project(m, jc)).size() == 1;
    if (circle && !all_fibers_circles)
      throw Error(ErrorKind::FactorizationMismatch, "circle projection with a non-circle vertex fiber");
    if (base_connected && all_fibers_circles && !circle)
      throw Error(ErrorKind::FactorizationMismatch, "all vertex fibers are circles but the projection is not");
  }
  return IndexSet(std::move(out));
}

FactorizationReport factorize(const ProductSubcomplex& m) {
  FactorizationReport r;
  r.j_m = circle_directions(m);
  const std::size_t n = m.arity();
  for (auto j : r.j_m.members()) r.torus_factors.push_back(project(m, IndexSet{j}));

  if (!r.j_m.empty()) {
    // Product of the circle projections, in J_M coordinates.
    CellSet tor{ProductCell{}};
    for (const auto& f : r.torus_factors) {
      CellSet next;
      for (const auto& c : tor)
        for (const auto& d : f.cells()) {
          auto e = c;
          e.push_back(d.at(0));
          next.insert(std::move(e));
        }
      tor = std::move(next);
    }
    auto pj = project(m, r.j_m);
    if (pj.cells() != tor) throw Error(ErrorKind::FactorizationMismatch, "p_J(M) is not the product of its circles");
    if (r.j_m.size() == n) {
      r.is_full_torus = true;
      if (m.cells() != tor) throw Error(ErrorKind::FactorizationMismatch, "M is not the product of its projections");
    } else {
      const IndexSet jc = r.j_m.complement(n);
      r.residual = project(m, jc);
      if (combine(pj, r.j_m, *r.residual) != m.cells())
        throw Error(ErrorKind::FactorizationMismatch, "M is not the product of torus and residual");
      if (!circle_directions(*r.residual).empty())
        throw Error(ErrorKind::FactorizationMismatch, "residual still projects onto a circle");
    }
  } else {
    r.residual = m;
  }

  auto& rd = r.rank_data;
  rd.b1 = first_betti(m);
  rd.connected = components(m).size() == 1;
  for (std::size_t j = 0; j < n; ++j) {
    const IndexSet jc = IndexSet{j}.complement(n);
    long best = -1;
    std::string best_label;
    for (const auto& v : base_vertices(m, jc)) {
      const long b = graph_profile(as_graph(fiber_complex(m, v, IndexSet{j}))).b1;
      std::string label = jc.empty() ? "()" : project(m, jc).label(v);
      if (b > best || (b == best && label < best_label)) {
        best = b;
        best_label = std::move(label);
      }
    }
    rd.chosen_vertices.push_back(best_label);
    rd.fiber_b1.push_back(best);
    rd.fiber_b1_sum += best;
  }
  const long nn = static_cast<long>(n);
  rd.rank_at_least_n = rd.b1 >= nn;
  rd.rank_at_least_fiber_sum = rd.b1 >= rd.fiber_b1_sum;
  const long k = rd.b1 - nn;
  if (k >= 0 && k < nn) rd.circle_bound = static_cast<long>(r.j_m.size()) >= nn - k;
  return r;
}

}  // namespace prodcurves
