#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "prodcurves/face_poset.hpp"
#include "prodcurves/graph.hpp"

namespace prodcurves {

// Sorted vertex indices.
using Simplex = std::vector<std::size_t>;

/// Abstract simplicial complex. Vertex indices follow the sorted order of the
/// vertex names, so orientation conventions are "sorted by id".
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
  // Names are sorted and facets re-indexed accordingly.
  static SimplicialComplex from_indexed(std::vector<std::string> names, const std::vector<Simplex>& facets);

  const std::vector<std::string>& vertex_names() const { return names_; }
  std::size_t vertex_count() const { return names_.size(); }
  const std::set<Simplex>& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  int dimension() const;
  std::vector<Simplex> simplices_of_dim(int k) const;
  std::vector<Simplex> facets() const;
  std::string label(const Simplex& s) const;
  std::size_t index_of(const std::string& name) const;

  // All simplices of dimension <= k.
  SimplicialComplex skeleton(int k) const;

 private:
  std::vector<std::string> names_;
  std::set<Simplex> simplices_;
};

std::vector<Simplex> faces_of(const Simplex& s);  // all nonempty faces including s

FacePoset to_face_poset(const SimplicialComplex& k);

// A loop-free graph as a simplicial complex; parallel edges are subdivided
// at a midpoint vertex named after the edge id.
SimplicialComplex to_simplicial(const Graph& g);

}  // namespace prodcurves
