#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "prodcurves/graph.hpp"

namespace prodcurves {

// One coordinate of a product cell: a vertex or an edge of the factor graph.
struct Coord {
  bool is_edge = false;
  std::uint32_t index = 0;

  static Coord vertex(std::size_t v) { return {false, static_cast<std::uint32_t>(v)}; }
  static Coord edge(std::size_t e) { return {true, static_cast<std::uint32_t>(e)}; }

  friend auto operator<=>(const Coord&, const Coord&) = default;
  friend bool operator==(const Coord&, const Coord&) = default;
};

using ProductCell = std::vector<Coord>;
using CellSet = std::set<ProductCell>;
using Factors = std::vector<Graph>;
using FactorsPtr = std::shared_ptr<const Factors>;

int cell_dim(const ProductCell& cell);

struct SignedProductFace {
  ProductCell face;
  int sign;
};

// Codimension-one faces with the product sign rule: an edge contributes
// head - tail, and the i-th edge coordinate carries (-1)^(edges before i).
std::vector<SignedProductFace> signed_facets(const Factors& factors, const ProductCell& cell);

// All faces of `cell`, including the cell itself.
CellSet closure_of(const Factors& factors, const ProductCell& cell);
CellSet face_closure(const Factors& factors, const CellSet& cells);

ProductCell make_cell(const Factors& factors, std::span<const std::string> ids);
std::vector<std::string> cell_ids(const Factors& factors, const ProductCell& cell);
std::string cell_label(const Factors& factors, const ProductCell& cell);

/// A face-closed set of cells of K_1 x ... x K_n. Factor graphs are shared
/// between subcomplexes built over the same product.
class ProductSubcomplex {
 public:
  ProductSubcomplex() = default;
  // `cells` must already be face-closed; this is checked.
  ProductSubcomplex(FactorsPtr factors, CellSet cells);

  const Factors& factors() const { return *factors_; }
  const FactorsPtr& factors_ptr() const { return factors_; }
  std::size_t arity() const { return factors_ ? factors_->size() : 0; }
  const CellSet& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const ProductCell& c) const { return cells_.count(c) > 0; }
  int dimension() const;

  std::vector<ProductCell> cells_of_dim(int k) const;
  // Cells that are not a proper face of another member.
  std::vector<ProductCell> maximal_cells() const;
  std::string label(const ProductCell& c) const { return cell_label(*factors_, c); }

  // Cell-set equality; factor graphs must agree too.
  friend bool operator==(const ProductSubcomplex& a, const ProductSubcomplex& b);

 private:
  FactorsPtr factors_;
  CellSet cells_;
};

ProductSubcomplex build_product(Factors factors, std::span<const ProductCell> top_cells);
ProductSubcomplex build_product(FactorsPtr factors, std::span<const ProductCell> top_cells);
ProductSubcomplex build_product(Factors factors, const std::vector<std::vector<std::string>>& top_cells);
ProductSubcomplex full_product(FactorsPtr factors);

// The 1-factor subcomplex as a subgraph of its factor (ids and name kept).
Graph as_graph(const ProductSubcomplex& m);

// Connected components, each as a face-closed subcomplex, ordered by smallest cell.
std::vector<ProductSubcomplex> components(const ProductSubcomplex& m);

// Open cell of `sigma` meets the closed cell `tau`.
bool open_cell_meets(const Factors& factors, const ProductCell& sigma, const ProductCell& tau);
bool is_face(const Factors& factors, const ProductCell& sigma, const ProductCell& tau);
// Every pair (sigma, tau) with open sigma meeting tau has sigma a face of tau.
bool has_proper_cells(const ProductSubcomplex& m);

}  // namespace prodcurves
