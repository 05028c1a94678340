#include "prodcurves/classify.hpp"

#include <map>
#include <numeric>

#include "prodcurves/error.hpp"

namespace prodcurves {

std::vector<std::size_t> top_incidence(const FacePoset& x, int n) {
  std::vector<std::size_t> inc(x.size(), 0);
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x.dim(c) != n - 1) continue;
    for (auto t : x.cofaces(c))
      if (x.dim(t) == n) ++inc[c];
  }
  return inc;
}

ClassificationFlags classify(const FacePoset& x, int n) {
  if (n < 0) throw Error(ErrorKind::DimensionMismatch, "negative dimension");
  if (x.dimension() > n)
    throw Error(ErrorKind::DimensionMismatch,
                "complex has dimension " + std::to_string(x.dimension()) + " above claimed " + std::to_string(n));
  ClassificationFlags out;
  auto tops = x.cells_of_dim(n);

  std::vector<bool> covered(x.size(), false);
  for (auto t : tops)
    for (auto f : x.closure(t)) covered[f] = true;
  out.top_cover = !tops.empty();
  for (std::size_t c = 0; c < x.size(); ++c)
    if (!covered[c]) out.top_cover = false;

  auto inc = top_incidence(x, n);
  bool at_least_two = true;
  bool exactly_two = true;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x.dim(c) != n - 1) continue;
    if (inc[c] < 2) at_least_two = false;
    if (inc[c] != 2) exactly_two = false;
    if (inc[c] == 1) out.free_faces.push_back(x.label(c));
  }
  out.ramified = out.top_cover && at_least_two;
  out.pseudo = out.ramified && exactly_two;

  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < tops.size(); ++i) slot[tops[i]] = i;
  std::vector<std::size_t> parent(tops.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x.dim(c) != n - 1) continue;
    std::optional<std::size_t> first;
    for (auto t : x.cofaces(c)) {
      if (x.dim(t) != n) continue;
      if (!first) first = slot.at(t);
      else parent[find(slot.at(t))] = find(*first);
    }
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < tops.size(); ++i) groups[find(i)].push_back(x.label(tops[i]));
  for (auto& [root, labels] : groups) out.combinatorial_components.push_back(std::move(labels));
  if (out.ramified) out.simple = out.combinatorial_components.size() == 1;
  return out;
}

ClassificationFlags classify(const ProductSubcomplex& m, int n) { return classify(to_face_poset(m), n); }

bool is_ramified(const FacePoset& x, int n) { return x.dimension() <= n && classify(x, n).ramified; }

bool is_ramified(const ProductSubcomplex& m, int n) { return is_ramified(to_face_poset(m), n); }

}  // namespace prodcurves
