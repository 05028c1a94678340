#include "prodcurves/collapse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "prodcurves/algebra.hpp"
#include "prodcurves/error.hpp"

namespace prodcurves {

namespace {

// Mutable alive-set view of a complex; collapses are applied and undone in place.
class CollapseState {
 public:
  explicit CollapseState(const FacePoset& x) : x_(x), alive_(x.size(), true), live_(x.size()), count_(x.size()) {
    for (std::size_t c = 0; c < x.size(); ++c) live_[c] = x.cofaces(c).size();
  }

  const std::vector<bool>& alive() const { return alive_; }
  std::size_t alive_count() const { return count_; }

  std::optional<std::size_t> free_coface(std::size_t c) const {
    if (!alive_[c] || live_[c] != 1) return std::nullopt;
    for (auto d : x_.cofaces(c))
      if (alive_[d]) return d;
    return std::nullopt;
  }

  void collapse(std::size_t c, std::size_t d) {
    for (auto cell : {c, d}) {
      alive_[cell] = false;
      for (const auto& f : x_.boundary(cell)) --live_[f.cell];
    }
    count_ -= 2;
  }

  void restore(std::size_t c, std::size_t d) {
    for (auto cell : {d, c}) {
      alive_[cell] = true;
      for (const auto& f : x_.boundary(cell)) ++live_[f.cell];
    }
    count_ += 2;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t c = 0; c < x_.size(); ++c)
      if (auto d = free_coface(c)) out.push_back({c, *d});
    return out;
  }

  FacePoset remainder() const { return x_.restrict_to(alive_); }

 private:
  const FacePoset& x_;
  std::vector<bool> alive_;
  std::vector<std::size_t> live_;
  std::size_t count_;
};

struct Searcher {
  const FacePoset& x;
  CollapseState state;
  std::function<bool(const CollapseState&)> goal;
  std::size_t budget;
  std::size_t nodes = 0;
  bool exhausted_budget = false;
  std::unordered_set<std::vector<bool>> dead{};
  std::vector<CollapseStep> path{};

  bool run() {
    if (++nodes > budget) {
      exhausted_budget = true;
      return false;
    }
    auto options = state.pairs();
    if (options.empty()) return goal(state);
    if (dead.count(state.alive())) return false;
    for (auto [c, d] : options) {
      state.collapse(c, d);
      path.push_back({x.label(c), x.label(d)});
      if (run()) return true;
      path.pop_back();
      state.restore(c, d);
      if (exhausted_budget) return false;
    }
    dead.insert(state.alive());
    return false;
  }
};

SearchResult search(const FacePoset& x, std::function<bool(const CollapseState&)> goal, std::size_t budget) {
  Searcher s{x, CollapseState(x), std::move(goal), budget};
  SearchResult out;
  const bool found = s.run();
  out.nodes = std::min(s.nodes, budget);
  if (found) {
    out.outcome = SearchOutcome::Yes;
    out.witness = std::move(s.path);
  } else {
    out.outcome = s.exhausted_budget ? SearchOutcome::Unknown : SearchOutcome::No;
  }
  return out;
}

bool allowed_remainder(long b1, RemainderClass c) {
  switch (b1) {
    case 0: return c == RemainderClass::Point;
    case 1: return c == RemainderClass::Circle;
    case 2: return c == RemainderClass::Torus || c == RemainderClass::Quasi1Manifold;
    default: return true;
  }
}

std::string rule_for(long b1) {
  if (b1 == 0) return "2E.1(i)";
  if (b1 == 1) return "2E.1(ii)";
  return "2E.1(iii)";
}

}  // namespace

CollapseSequence maximal_collapse(const FacePoset& x, CollapsePolicy policy, std::uint64_t seed) {
  CollapseState state(x);
  std::vector<std::size_t> priority(x.size());
  std::iota(priority.begin(), priority.end(), 0);
  if (policy == CollapsePolicy::HighestId) std::reverse(priority.begin(), priority.end());
  if (policy == CollapsePolicy::Shuffled) {
    std::mt19937_64 rng(seed);
    std::shuffle(priority.begin(), priority.end(), rng);
  }
  std::set<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t c = 0; c < x.size(); ++c)
    if (state.free_coface(c)) queue.insert({priority[c], c});
  CollapseSequence out;
  while (!queue.empty()) {
    auto c = queue.begin()->second;
    queue.erase(queue.begin());
    auto d = state.free_coface(c);
    if (!d) continue;
    state.collapse(c, *d);
    out.steps.push_back({x.label(c), x.label(*d)});
    for (auto cell : {c, *d})
      for (const auto& f : x.boundary(cell))
        if (state.free_coface(f.cell)) queue.insert({priority[f.cell], f.cell});
  }
  out.remainder = state.remainder();
  return out;
}

FacePoset replay(const FacePoset& x, std::span<const CollapseStep> steps) {
  CollapseState state(x);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    auto c = x.find(s.free_cell);
    auto d = x.find(s.coface);
    if (!c || !d) throw Error(ErrorKind::BadWitness, "step " + std::to_string(i) + " names an unknown cell");
    auto actual = state.free_coface(*c);
    if (!actual || *actual != *d)
      throw Error(ErrorKind::BadWitness, "step " + std::to_string(i) + ": '" + s.free_cell + "' is not a free face of '" +
                                             s.coface + "'");
    state.collapse(*c, *d);
  }
  return state.remainder();
}

std::vector<std::pair<std::size_t, std::size_t>> free_pairs(const FacePoset& x) { return CollapseState(x).pairs(); }

SearchResult search_collapsible(const FacePoset& x, std::size_t budget) {
  return search(x, [](const CollapseState& s) { return s.alive_count() == 1; }, budget);
}

SearchResult search_maximal(const FacePoset& x, const std::function<bool(const FacePoset&)>& accept,
                            std::size_t budget) {
  return search(x, [&](const CollapseState& s) { return accept(s.remainder()); }, budget);
}

std::string_view to_string(RemainderClass c) noexcept {
  switch (c) {
    case RemainderClass::Point: return "point";
    case RemainderClass::Circle: return "circle";
    case RemainderClass::Torus: return "torus";
    case RemainderClass::Quasi1Manifold: return "quasi_1_manifold";
    case RemainderClass::OtherGraph: return "other_graph";
    case RemainderClass::Other2Dim: return "other_2dim";
  }
  return "other_2dim";
}

RemainderClass classify_remainder(const FacePoset& r) {
  const int dim = r.dimension();
  std::size_t parts = 0;
  cell_components(r, &parts);
  if (dim <= 0) return r.size() == 1 ? RemainderClass::Point : RemainderClass::OtherGraph;
  if (dim == 1) {
    if (parts != 1) return RemainderClass::OtherGraph;
    bool all_two = true;
    bool endpoint = false;
    for (auto v : r.cells_of_dim(0)) {
      const auto deg = r.cofaces(v).size();
      if (deg != 2) all_two = false;
      if (deg <= 1) endpoint = true;
    }
    if (all_two) return RemainderClass::Circle;
    return endpoint ? RemainderClass::OtherGraph : RemainderClass::Quasi1Manifold;
  }
  if (dim == 2 && parts == 1 && surface_defect(r).empty()) {
    auto s = surface_summary(r);
    if (s.orientable && s.chi == 0) return RemainderClass::Torus;
  }
  return RemainderClass::Other2Dim;
}

EmbeddabilityVerdict certify_nonembeddable(const FacePoset& x, std::size_t budget) {
  if (x.dimension() != 2) throw Error(ErrorKind::NotTwoDimensional, "complex has dimension " + std::to_string(x.dimension()));
  std::size_t parts = 0;
  cell_components(x, &parts);
  if (parts != 1) throw Error(ErrorKind::NotConnected, std::to_string(parts) + " components");

  auto h = homology_summary(x);
  EmbeddabilityVerdict v;
  v.b1 = h.betti[1];
  v.theorem_applies = v.b1 <= 2;
  auto seq = maximal_collapse(x);
  v.remainder_class = classify_remainder(seq.remainder);
  v.remainder_counts = seq.remainder.count_by_dim();
  v.steps = seq.steps;
  if (!v.theorem_applies) return v;

  auto make_certificate = [&] {
    Certificate c;
    c.rule = rule_for(v.b1);
    c.b1 = v.b1;
    c.remainder_counts = v.remainder_counts;
    c.steps = v.steps;
    bool acyclic = v.b1 == 0 && h.betti[2] == 0;
    for (const auto& t : h.torsion) acyclic = acyclic && t.empty();
    const auto free_edges = free_pairs(x);
    const bool no_free_edges =
        std::none_of(free_edges.begin(), free_edges.end(), [&](const auto& p) { return x.dim(p.first) == 1; });
    if (acyclic && no_free_edges) c.supporting.push_back("1.7");
    return c;
  };
  if (!allowed_remainder(v.b1, v.remainder_class)) v.certificate = make_certificate();

  ExistentialReading ex;
  const long b1 = v.b1;
  auto found = search_maximal(
      x, [b1](const FacePoset& r) { return allowed_remainder(b1, classify_remainder(r)); }, budget);
  ex.allowed_remainder_found = found.outcome;
  ex.nodes = found.nodes;
  if (found.outcome == SearchOutcome::No) ex.certificate = make_certificate();
  if (found.outcome != SearchOutcome::Unknown) v.readings_disagree = v.certificate.has_value() != ex.certificate.has_value();
  v.existential = std::move(ex);
  return v;
}

}  // namespace prodcurves
