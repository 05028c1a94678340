#pragma once

#include <span>
#include <string>
#include <vector>

#include "prodcurves/collapse.hpp"
#include "prodcurves/face_poset.hpp"
#include "prodcurves/product.hpp"

namespace prodcurves {

/// Oriented edge path in a product complex: edges[i] joins vertices[i] and
/// vertices[i + 1].
struct EdgePath {
  std::vector<ProductCell> vertices;
  std::vector<ProductCell> edges;

  EdgePath reversed() const;
  // Concatenation; `next` must start where this path ends.
  void append(const EdgePath& next);
  CellSet cells() const;
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

// Endpoints of a 1-dimensional product cell, tail first.
std::pair<ProductCell, ProductCell> product_edge_ends(const Factors& f, const ProductCell& edge);

// Builds a path from a start vertex and an edge sequence; throws ArcNotInProduct
// when an edge does not continue the path.
EdgePath path_from_edges(const Factors& f, ProductCell start, std::span<const ProductCell> edges);

struct StaircaseSegment {
  bool vertical = true;  // moves in the second factor
  std::size_t first = 0;  // index into path.vertices
  std::size_t last = 0;
};

struct StaircaseArc {
  EdgePath path;  // in staircase coordinates: swapped when transposed
  std::vector<StaircaseSegment> segments;
  bool transposed = false;
};

// Merges runs of same-direction edges. A horizontal-first path is transposed
// so the staircase starts vertically. Throws NotSimplePath, ArcNotInProduct.
StaircaseArc normalize_staircase(const Factors& f, const EdgePath& a);

struct StaircaseDisc {
  Graph k1;
  Graph k2;
  CellSet disc;  // top cells, original coordinates
  // Boundary of the disc outside the arc, from the arc's end back to its start.
  EdgePath free_path;
  bool transposed = false;
  std::vector<std::string> pendants1;
  std::vector<std::string> pendants2;
};

// Extends k1 and k2 by pendant edges and returns a disc meeting k1 x k2
// exactly in the arc. Throws ArcNotInProduct.
StaircaseDisc staircase_disc(const Graph& k1, const Graph& k2, const StaircaseArc& a);

/// Cell-to-cells map from a regular complex into a product complex.
struct CellwiseMap {
  FacePoset source;
  ProductSubcomplex target;
  std::vector<CellSet> image;  // indexed by source cell
};

struct MapVerification {
  bool passed = true;
  std::string violation;
  std::string first_cell;
  std::string second_cell;
};

MapVerification verify_cellwise_map(const CellwiseMap& h);

// Empty when `cells` is a combinatorial k-ball: pure, each (k-1)-cell on at
// most two k-cells, acyclic, boundary with the homology of a (k-1)-sphere and,
// for k = 2, vertex links that are paths or cycles.
std::string ball_defect(const FactorsPtr& f, const CellSet& cells, int k);

// Union of all images, as a subcomplex of the target product.
ProductSubcomplex image_complex(const CellwiseMap& h);

struct TreeEmbedding {
  Graph t1;
  Graph t2;
  CellwiseMap map;
};

// Expands a collapse witness back from the point; throws BadWitness.
TreeEmbedding embed_in_trees(const FacePoset& x, std::span<const CollapseStep> witness);

}  // namespace prodcurves
