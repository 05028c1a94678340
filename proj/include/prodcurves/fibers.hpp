#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prodcurves/classify.hpp"
#include "prodcurves/product.hpp"

namespace prodcurves {

/// Sorted, duplicate-free set of 0-based factor indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> members) : IndexSet(std::vector<std::size_t>(members)) {}
  explicit IndexSet(std::vector<std::size_t> members);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t j) const;
  IndexSet complement(std::size_t n) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

// Restriction of a cell to the coordinates in J.
ProductCell restrict_cell(const ProductCell& c, const IndexSet& j);
// Inverse of restriction: a over J and b over the complement.
ProductCell merge_cell(const ProductCell& a, const IndexSet& j, const ProductCell& b);

// p_J(M) as a subcomplex of the product of the factors in J.
ProductSubcomplex project(const ProductSubcomplex& m, const IndexSet& j);

struct ComponentProfile {
  ClassificationFlags flags;
  long b1 = 0;
};

struct FiberReport {
  ProductCell base_cell;
  ProductSubcomplex fiber;
  std::vector<ComponentProfile> component_profiles;
};

// P_J(tau) for a cell tau of K'_{J^c}, given in complement coordinates.
FiberReport fiber(const ProductSubcomplex& m, const ProductCell& tau, const IndexSet& j);
// Just the subcomplex, without component analysis.
ProductSubcomplex fiber_complex(const ProductSubcomplex& m, const ProductCell& tau, const IndexSet& j);

// Product A x B of subcomplexes over J and J^c, over the factors of `m`.
CellSet combine(const ProductSubcomplex& a, const IndexSet& j, const ProductSubcomplex& b);

// J_M: factors whose projection is a circle. Throws NotRamified.
IndexSet circle_directions(const ProductSubcomplex& m);

struct RankData {
  long b1 = 0;
  std::vector<std::string> chosen_vertices;  // label of v_j in K'_{j^c}
  std::vector<long> fiber_b1;                // b1(P_j(v_j))
  long fiber_b1_sum = 0;
  bool connected = false;
  bool rank_at_least_n = false;
  bool rank_at_least_fiber_sum = false;
  bool circle_bound = true;  // b1 = n + k with k < n implies |J_M| >= n - k
};

struct FactorizationReport {
  IndexSet j_m;
  std::vector<ProductSubcomplex> torus_factors;
  std::optional<ProductSubcomplex> residual;
  bool is_full_torus = false;
  RankData rank_data;
};

// Throws NotRamified, or FactorizationMismatch if the product structure fails.
FactorizationReport factorize(const ProductSubcomplex& m);

long first_betti(const ProductSubcomplex& m);

}  // namespace prodcurves
