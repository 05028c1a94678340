#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "prodcurves/product.hpp"

namespace prodcurves {

struct SignedFace {
  std::size_t cell;
  int sign;
};

/// Representation-neutral regular CW complex: cells with dimensions, labels
/// and signed codimension-one boundaries. Cells are appended in an order where
/// every face precedes its cofaces.
class FacePoset {
 public:
  std::size_t add_cell(std::string label, int dim, std::vector<SignedFace> boundary = {});

  std::size_t size() const { return dims_.size(); }
  int dim(std::size_t c) const { return dims_.at(c); }
  const std::string& label(std::size_t c) const { return labels_.at(c); }
  std::span<const SignedFace> boundary(std::size_t c) const { return boundary_.at(c); }
  std::span<const std::size_t> cofaces(std::size_t c) const { return cofaces_.at(c); }
  std::optional<std::size_t> find(const std::string& label) const;

  int dimension() const;
  std::vector<std::size_t> cells_of_dim(int k) const;
  std::vector<std::size_t> count_by_dim() const;

  // All faces of c (including c).
  std::vector<std::size_t> closure(std::size_t c) const;
  // Subcomplex on the kept cells, which must be face-closed. `old_index`
  // receives the source index of each new cell.
  FacePoset restrict_to(const std::vector<bool>& keep, std::vector<std::size_t>* old_index = nullptr) const;

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SignedFace>> boundary_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Checks the regular CW invariants: 1-cells have two distinct 0-faces with
// opposite signs, each 2-cell boundary is a single closed edge cycle, no face
// repeats, and the boundary of a boundary vanishes. Throws InvalidComplex.
void validate(const FacePoset& x);

// The two ordered vertex endpoints (tail, head) of a 1-cell.
std::pair<std::size_t, std::size_t> edge_endpoints(const FacePoset& x, std::size_t edge);

// Appends a 2-cell whose boundary is the given closed edge cycle, in walking
// order; signs are derived from the traversal direction.
std::size_t add_polygon(FacePoset& x, std::string label, const std::vector<std::size_t>& cycle);

// Vertices of a 2-cell in boundary-cycle order, walking each edge tail->head
// when its sign is +1.
std::vector<std::size_t> polygon_vertices(const FacePoset& x, std::size_t face);

struct ProductPoset {
  FacePoset poset;
  std::vector<ProductCell> cells;  // poset index -> product cell
};

ProductPoset lower_product(const ProductSubcomplex& m);
FacePoset to_face_poset(const ProductSubcomplex& m);

// Order complex of the face poset: the canonical triangulation by barycenters.
class SimplicialComplex;
SimplicialComplex triangulate(const FacePoset& x);

// Connected components of the 1-skeleton, as a label per cell.
std::vector<std::size_t> cell_components(const FacePoset& x, std::size_t* count = nullptr);

}  // namespace prodcurves
