#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prodcurves/simplicial.hpp"
#include "prodcurves/treeembed.hpp"

namespace prodcurves {

struct Subdivision {
  SimplicialComplex complex;  // vertices named by the labels of the simplices of K
  std::vector<Simplex> vertex_simplex;  // sd vertex -> simplex of K
  // Smallest simplex of K containing the sd simplex: its top chain element.
  Simplex carrier(const Simplex& s) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& k);

struct JoinPiece {
  Simplex simplex;            // in the subdivision
  std::optional<Simplex> low;   // sigma' in the k-skeleton
  std::optional<Simplex> high;  // sigma'' in the dual part
};

struct JoinDecomposition {
  SimplicialComplex base;
  int k = 0;
  int l = 0;
  SimplicialComplex skeleton_part;
  // Chains of simplices above dimension k; vertices named by simplex labels.
  SimplicialComplex dual_part;
  Subdivision subdivision;
  std::vector<JoinPiece> pieces;
};

// Throws BadDimensionSplit unless 0 <= k < dim K.
JoinDecomposition join_decomposition(const SimplicialComplex& k, int skeleton_dim);

// Cone with a fresh apex vertex.
SimplicialComplex cone(const SimplicialComplex& k, std::string* apex_name = nullptr);

struct ModProductEmbedding {
  std::vector<Graph> mods;
  std::vector<std::size_t> leaves;  // m for each factor
  CellwiseMap map;                  // source: the cone over K
};

// Recursive k = 0 split: one m-od per dimension level.
ModProductEmbedding cone_embed_mods(const SimplicialComplex& k);

}  // namespace prodcurves
