#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "prodcurves/face_poset.hpp"

namespace prodcurves {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SnfResult {
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;  // d1 | d2 | ..., all positive
};

SnfResult smith_normal_form(IntMatrix m);

// d[k-1] is the boundary map from k-cells to (k-1)-cells, rows and columns in
// the order of FacePoset::cells_of_dim.
std::vector<IntMatrix> boundary_matrices(const FacePoset& x);

struct HomologySummary {
  std::vector<long> betti;
  std::vector<std::vector<BigInt>> torsion;  // per degree
  long euler = 0;
};

HomologySummary homology_summary(const FacePoset& x);

struct SurfaceSummary {
  bool closed = false;
  bool orientable = false;
  long genus = 0;  // crosscap count when nonorientable
  long chi = 0;
  // +1/-1 per 2-cell (cells_of_dim(2) order) forming a coherent orientation; empty if nonorientable.
  std::vector<int> orientation;
};

// Throws NotASurface naming the offending cell unless x is a closed surface.
SurfaceSummary surface_summary(const FacePoset& x);

// Empty when x is a closed surface, otherwise the reason.
std::string surface_defect(const FacePoset& x);

}  // namespace prodcurves
