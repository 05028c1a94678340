#include <algorithm>
#include <functional>
#include <set>

#include "prodcurves/algebra.hpp"
#include "prodcurves/classify.hpp"
#include "prodcurves/error.hpp"
#include "prodcurves/fibers.hpp"
#include "prodcurves/gallery.hpp"
#include "prodcurves/treeembed.hpp"

namespace prodcurves {

namespace {

using nlohmann::json;

std::set<std::size_t> coord_vertices(const Graph& g, const Coord& c) {
  if (!c.is_edge) return {c.index};
  return {g.edge(c.index).tail, g.edge(c.index).head};
}

const ProductSubcomplex& as_product(const GalleryItem& item) {
  if (auto p = std::get_if<ProductSubcomplex>(&item.payload)) return *p;
  throw Error(ErrorKind::InvalidComplex, item.name + " is not a product subcomplex");
}

json betti_json(const HomologySummary& h) { return h.betti; }

json one_based(const IndexSet& j) {
  json out = json::array();
  for (auto i : j.members()) out.push_back(i + 1);
  return out;
}

// Evaluates one expected key; cached pipeline results live in the closure.
class Evaluator {
 public:
  explicit Evaluator(const GalleryItem& item) : item_(item), x_(lower(item.payload)) {}

  json operator()(const std::string& key) {
    if (key == "betti") return betti_json(homology());
    if (key == "torsion1") {
      json t = json::array();
      if (homology().torsion.size() > 1)
        for (const auto& v : homology().torsion[1]) t.push_back(v.convert_to<long>());
      return t;
    }
    if (key == "b1") {
      if (auto g = std::get_if<Graph>(&item_.payload)) return graph_profile(*g).b1;
      return homology().betti.size() > 1 ? homology().betti[1] : 0;
    }
    if (key == "b1_at_least") return homology().betti.size() > 1 ? homology().betti[1] : 0;
    if (key == "endpoints") return graph_profile(std::get<Graph>(item_.payload)).endpoint_vertices.size();
    if (key == "is_circle") return graph_profile(std::get<Graph>(item_.payload)).is_circle;
    if (key == "surface") {
      auto s = surface_summary(x_);
      return {{"closed", s.closed}, {"orientable", s.orientable}, {"chi", s.chi}};
    }
    if (key == "genus") return surface_summary(x_).genus;
    if (key == "J_M") return one_based(fact().j_m);
    if (key == "is_full_torus") return fact().is_full_torus;
    if (key == "ramified") return flags().ramified;
    if (key == "pseudo") return flags().pseudo;
    if (key == "free_faces") return flags().free_faces.size();
    if (key == "remainder") return std::string(to_string(classify_remainder(collapse().remainder)));
    if (key == "collapse_steps") return collapse().steps.size();
    if (key == "certificate") {
      auto v = certify_nonembeddable(x_);
      return v.certificate ? json(v.certificate->rule) : json(nullptr);
    }
    if (key == "collapsible") {
      switch (search_collapsible(x_).outcome) {
        case SearchOutcome::Yes: return "yes";
        case SearchOutcome::No: return "no";
        case SearchOutcome::Unknown: return "unknown";
      }
    }
    if (key == "witness_replays") {
      auto rc = gallery::random_collapsible(static_cast<std::uint64_t>(item_.params.at("seed")),
                                            static_cast<int>(item_.params.at("size")));
      return replay(rc.complex, rc.witness).size() == 1;
    }
    if (key == "surjective_projections") {
      const auto& m = as_product(item_);
      for (std::size_t i = 0; i < m.arity(); ++i) {
        const auto& g = m.factors()[i];
        if (project(m, IndexSet{i}).size() != g.vertex_count() + g.edge_count()) return false;
      }
      return true;
    }
    if (key == "ramified_projections") {
      const auto& m = as_product(item_);
      for (std::size_t i = 0; i < m.arity(); ++i)
        if (!is_ramified(project(m, IndexSet{i}), 1)) return false;
      return true;
    }
    if (key == "involution_invariant") {
      const auto& m = as_product(item_);
      if (m.arity() != 2 || !(m.factors()[0] == m.factors()[1])) return false;
      for (const auto& c : m.cells())
        if (!m.contains({c[1], c[0]})) return false;
      return true;
    }
    if (key == "diagonal_disjoint") {
      const auto& m = as_product(item_);
      for (const auto& c : m.cells()) {
        auto a = coord_vertices(m.factors()[0], c[0]);
        auto b = coord_vertices(m.factors()[1], c[1]);
        for (auto v : a)
          if (b.count(v)) return false;
      }
      return true;
    }
    if (key == "top_cells") return as_product(item_).cells_of_dim(as_product(item_).dimension()).size();
    if (key == "disc" && item_.name == "staircase_2F6") return ball_defect(staircase().disc.factors_ptr(), staircase().disc.cells(), 2).empty();
    if (key == "exact_intersection") {
      const auto& s = staircase();
      CellSet meet;
      std::set_intersection(s.disc.cells().begin(), s.disc.cells().end(), s.base.cells().begin(), s.base.cells().end(),
                            std::inserter(meet, meet.end()));
      return meet == s.arc.cells();
    }
    if (key == "arc") return arc_check();
    if (key == "arc_endpoint") return arc_endpoint();
    if (key == "subdivided_cell") return subdivided_cell();
    if (key == "disc") return disc_2F6();
    if (key == "collapse_reaches_product") {
      auto r = collapse().remainder;
      for (const auto& l : {"d1", "D1", "D2", "d1-a0a0", "d1-c1", "d1-c2"})
        if (r.find(l)) return false;
      return r.size() + 6 == x_.size();
    }
    throw Error(ErrorKind::InvariantViolation, "no check for expected key '" + key + "'");
  }

  // Keys compared by a bound rather than equality.
  static bool is_lower_bound(const std::string& key) { return key == "b1_at_least"; }

 private:
  const HomologySummary& homology() {
    if (!homology_) homology_ = homology_summary(x_);
    return *homology_;
  }
  const FactorizationReport& fact() {
    if (!fact_) fact_ = factorize(as_product(item_));
    return *fact_;
  }
  const ClassificationFlags& flags() {
    if (!flags_) flags_ = classify(x_, x_.dimension());
    return *flags_;
  }
  const CollapseSequence& collapse() {
    if (!collapse_) collapse_ = maximal_collapse(x_);
    return *collapse_;
  }
  const gallery::Staircase2F6& staircase() {
    if (!staircase_) staircase_ = gallery::staircase_2F6(static_cast<int>(item_.params.at("N")));
    return *staircase_;
  }

  std::size_t cell(const std::string& l) const {
    auto c = x_.find(l);
    if (!c) throw Error(ErrorKind::InvariantViolation, "missing cell " + l);
    return *c;
  }
  std::vector<std::size_t> cells(const json& labels) const {
    std::vector<std::size_t> out;
    for (const auto& l : labels) out.push_back(cell(l.get<std::string>()));
    return out;
  }
  // Number of 2-cells among `twos` having `e` on the boundary.
  std::size_t on(std::size_t e, const std::vector<std::size_t>& twos) const {
    std::size_t n = 0;
    for (auto t : twos)
      for (const auto& f : x_.boundary(t)) n += f.cell == e;
    return n;
  }
  // The arc is a simple edge path; returns the labels of its edges when it is.
  json arc_check() const {
    auto edges = cells(item_.expected.at("arc"));
    std::map<std::size_t, int> deg;
    for (auto e : edges) {
      auto [a, b] = edge_endpoints(x_, e);
      ++deg[a];
      ++deg[b];
    }
    std::size_t ends = 0;
    for (auto [v, d] : deg) {
      if (d > 2) return nullptr;
      ends += d == 1;
    }
    if (ends != 2 || deg.size() != edges.size() + 1) return nullptr;
    return item_.expected.at("arc");
  }
  // (a0,a0) is an end of A and lies on the boundary of the subdivided cell.
  json arc_endpoint() const {
    auto edges = cells(item_.expected.at("arc"));
    const auto p = cell(item_.expected.at("arc_endpoint").get<std::string>());
    int d = 0;
    for (auto e : edges) {
      auto [a, b] = edge_endpoints(x_, e);
      d += (a == p) + (b == p);
    }
    if (d != 1) return nullptr;
    return x_.label(p);
  }
  // The 2-cells form a disc; A minus its endpoint lies in that disc's interior.
  json subdivided_cell() const {
    auto twos = cells(item_.expected.at("subdivided_cell"));
    if (!is_disc(twos)) return nullptr;
    for (auto e : cells(item_.expected.at("arc")))
      if (on(e, twos) != 2) return nullptr;
    // Interior vertices of A avoid every boundary edge of the disc.
    const auto p = cell(item_.expected.at("arc_endpoint").get<std::string>());
    for (auto e : cells(item_.expected.at("arc"))) {
      auto [a, b] = edge_endpoints(x_, e);
      for (auto v : {a, b}) {
        if (v == p) continue;
        for (auto t : twos)
          for (const auto& f : x_.boundary(t))
            if (on(f.cell, twos) == 1) {
              auto [u, w] = edge_endpoints(x_, f.cell);
              if (u == v || w == v) return nullptr;
            }
      }
    }
    return item_.expected.at("subdivided_cell");
  }
  // D is a disc with A on its boundary.
  json disc_2F6() const {
    auto twos = cells(item_.expected.at("disc"));
    if (!is_disc(twos)) return nullptr;
    for (auto e : cells(item_.expected.at("arc")))
      if (on(e, twos) != 1) return nullptr;
    return item_.expected.at("disc");
  }
  bool is_disc(const std::vector<std::size_t>& twos) const {
    std::vector<bool> keep(x_.size(), false);
    for (auto t : twos)
      for (auto f : x_.closure(t)) keep[f] = true;
    auto d = x_.restrict_to(keep);
    auto h = homology_summary(d);
    if (h.betti != std::vector<long>{1, 0, 0}) return false;
    for (auto e : d.cells_of_dim(1)) {
      auto n = d.cofaces(e).size();
      if (n == 0 || n > 2) return false;
    }
    return true;
  }

  const GalleryItem& item_;
  FacePoset x_;
  std::optional<HomologySummary> homology_;
  std::optional<FactorizationReport> fact_;
  std::optional<ClassificationFlags> flags_;
  std::optional<CollapseSequence> collapse_;
  std::optional<gallery::Staircase2F6> staircase_;
};

}  // namespace

std::vector<CheckResult> verify_item(const GalleryItem& item) {
  std::vector<CheckResult> out;
  Evaluator eval(item);
  for (const auto& [key, want] : item.expected.items()) {
    CheckResult r{key, false, {}};
    try {
      const json got = eval(key);
      r.passed = Evaluator::is_lower_bound(key) ? got.get<long>() >= want.get<long>() : got == want;
      if (!r.passed) r.detail = "expected " + want.dump() + ", got " + got.dump();
    } catch (const Error& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace prodcurves
