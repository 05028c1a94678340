#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prodcurves/face_poset.hpp"

namespace prodcurves {

struct ClassificationFlags {
  bool top_cover = false;
  bool ramified = false;
  bool pseudo = false;
  // Only meaningful when ramified; empty otherwise.
  std::optional<bool> simple;
  std::vector<std::string> free_faces;
  // Top cells grouped by chain connectedness through shared (n-1)-cells.
  std::vector<std::vector<std::string>> combinatorial_components;
};

// Incidence-count recognition for a claimed dimension n. Throws
// DimensionMismatch when x has cells above dimension n.
ClassificationFlags classify(const FacePoset& x, int n);
ClassificationFlags classify(const ProductSubcomplex& m, int n);

// Number of n-cells on each (n-1)-cell, indexed by cell.
std::vector<std::size_t> top_incidence(const FacePoset& x, int n);

bool is_ramified(const FacePoset& x, int n);
bool is_ramified(const ProductSubcomplex& m, int n);

}  // namespace prodcurves
