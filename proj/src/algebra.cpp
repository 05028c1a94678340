#include "prodcurves/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "prodcurves/error.hpp"

namespace prodcurves {

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

SnfResult dense_snf(IntMatrix m);

// Eliminates +-1 pivots on a sparse copy; each contributes an invariant
// factor 1. Returns the count and leaves the remaining block in `m`.
std::size_t eliminate_units(IntMatrix& m) {
  std::vector<std::map<std::size_t, BigInt>> rows(m.rows());
  std::vector<std::set<std::size_t>> cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) {
        rows[i][j] = m.at(i, j);
        cols[j].insert(i);
      }
  std::vector<bool> row_alive(m.rows(), true), col_alive(m.cols(), true);
  std::size_t units = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r]) continue;
      // Sparsest column among the unit entries of this row.
      std::size_t c = m.cols();
      for (const auto& [j, v] : rows[r])
        if ((v == 1 || v == -1) && (c == m.cols() || cols[j].size() < cols[c].size())) c = j;
      if (c == m.cols()) continue;
      const BigInt p = rows[r].at(c);
      const auto pivot_row = rows[r];
      for (auto i : std::vector<std::size_t>(cols[c].begin(), cols[c].end())) {
        if (i == r) continue;
        const BigInt q = rows[i].at(c) * p;  // p = +-1, so q = a_ic / p
        for (const auto& [j, v] : pivot_row) {
          BigInt& e = rows[i][j];
          e -= q * v;
          if (e == 0) {
            rows[i].erase(j);
            cols[j].erase(i);
          } else {
            cols[j].insert(i);
          }
        }
      }
      for (const auto& [j, v] : pivot_row) cols[j].erase(r);
      rows[r].clear();
      row_alive[r] = false;
      col_alive[c] = false;
      ++units;
      progress = true;
    }
  }
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (row_alive[i] && !rows[i].empty()) live_rows.push_back(i);
  std::vector<std::size_t> col_pos(m.cols(), m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (col_alive[j] && !cols[j].empty()) {
      col_pos[j] = live_cols.size();
      live_cols.push_back(j);
    }
  IntMatrix rest(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [j, v] : rows[live_rows[i]]) rest.at(i, col_pos[j]) = v;
  m = std::move(rest);
  return units;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
  const std::size_t units = eliminate_units(m);
  auto rest = dense_snf(std::move(m));
  SnfResult out;
  out.rank = units + rest.rank;
  out.invariant_factors.assign(units, BigInt(1));
  out.invariant_factors.insert(out.invariant_factors.end(), rest.invariant_factors.begin(), rest.invariant_factors.end());
  return out;
}

namespace {

SnfResult dense_snf(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero |entry| in the trailing block.
    auto bring_min = [&](bool whole_block) {
      std::size_t bi = rows, bj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          const BigInt& v = m.at(i, j);
          if (v == 0) continue;
          BigInt a = abs(v);
          if (bi == rows || a < best) {
            best = a;
            bi = i;
            bj = j;
            if (best == 1) break;
          }
        }
      if (bi == rows) return false;
      swap_rows(m, t, bi);
      swap_cols(m, t, bj);
      return true;
    };
    if (!bring_min(true)) break;
    for (;;) {
      bool clean = true;
      const BigInt p = m.at(t, t);
      std::vector<std::size_t> row_nz;
      for (std::size_t j = t; j < cols; ++j)
        if (m.at(t, j) != 0) row_nz.push_back(j);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        BigInt q = m.at(i, t) / p;
        if (q != 0)
          for (auto j : row_nz) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;
      }
      std::vector<std::size_t> col_nz;
      for (std::size_t i = t; i < rows; ++i)
        if (m.at(i, t) != 0) col_nz.push_back(i);
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / p;
        if (q != 0)
          for (auto i : col_nz) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (clean) break;
      bring_min(false);
    }
    diag.push_back(abs(m.at(t, t)));
  }
  // diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  SnfResult out;
  out.rank = diag.size();
  out.invariant_factors = std::move(diag);
  return out;
}

}  // namespace

std::vector<IntMatrix> boundary_matrices(const FacePoset& x) {
  const int top = x.dimension();
  std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(std::max(top + 1, 0)));
  std::vector<std::size_t> pos(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    auto& bucket = by_dim[static_cast<std::size_t>(x.dim(c))];
    pos[c] = bucket.size();
    bucket.push_back(c);
  }
  std::vector<IntMatrix> out;
  for (int k = 1; k <= top; ++k) {
    const auto& cols = by_dim[static_cast<std::size_t>(k)];
    IntMatrix d(by_dim[static_cast<std::size_t>(k - 1)].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& f : x.boundary(cols[j])) d.at(pos[f.cell], j) += f.sign;
    out.push_back(std::move(d));
  }
  return out;
}

HomologySummary homology_summary(const FacePoset& x) {
  HomologySummary out;
  const int top = x.dimension();
  if (top < 0) return out;
  auto counts = x.count_by_dim();
  auto ds = boundary_matrices(x);
  std::vector<SnfResult> snf;
  for (auto& d : ds) snf.push_back(smith_normal_form(std::move(d)));
  auto rank = [&](int k) -> long {
    if (k < 1 || k > top) return 0;
    return static_cast<long>(snf[static_cast<std::size_t>(k - 1)].rank);
  };
  for (int k = 0; k <= top; ++k) {
    out.betti.push_back(static_cast<long>(counts[static_cast<std::size_t>(k)]) - rank(k) - rank(k + 1));
    std::vector<BigInt> tors;
    if (k + 1 <= top)
      for (const auto& f : snf[static_cast<std::size_t>(k)].invariant_factors)
        if (f > 1) tors.push_back(f);
    out.torsion.push_back(std::move(tors));
    const long sign = (k % 2 == 0) ? 1 : -1;
    out.euler += sign * static_cast<long>(counts[static_cast<std::size_t>(k)]);
  }
  long from_betti = 0;
  for (std::size_t k = 0; k < out.betti.size(); ++k) from_betti += (k % 2 == 0 ? 1 : -1) * out.betti[k];
  if (from_betti != out.euler) throw Error(ErrorKind::InvariantViolation, "Euler characteristic mismatch");
  return out;
}

std::string surface_defect(const FacePoset& x) {
  if (x.dimension() != 2) return "complex is not 2-dimensional";
  for (auto e : x.cells_of_dim(1)) {
    std::size_t n = 0;
    for (auto f : x.cofaces(e)) n += x.dim(f) == 2;
    if (n != 2) return "edge '" + x.label(e) + "' lies in " + std::to_string(n) + " 2-cells";
  }
  // Link graph at v: nodes are the edges at v, one link edge per corner of a 2-cell at v.
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> corners;
  for (auto f : x.cells_of_dim(2)) {
    std::map<std::size_t, std::vector<std::size_t>> at;
    for (const auto& b : x.boundary(f)) {
      auto [t, h] = edge_endpoints(x, b.cell);
      at[t].push_back(b.cell);
      at[h].push_back(b.cell);
    }
    for (auto& [v, es] : at) corners[v].push_back({es.at(0), es.at(1)});
  }
  for (auto v : x.cells_of_dim(0)) {
    auto it = corners.find(v);
    if (it == corners.end()) return "vertex '" + x.label(v) + "' has an empty link";
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (auto [a, b] : it->second) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& [node, nb] : adj)
      if (nb.size() != 2) return "vertex '" + x.label(v) + "' has a link that is not a circle";
    std::set<std::size_t> seen{adj.begin()->first};
    std::vector<std::size_t> stack{adj.begin()->first};
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (auto b : adj[a])
        if (seen.insert(b).second) stack.push_back(b);
    }
    if (seen.size() != adj.size()) return "vertex '" + x.label(v) + "' has a disconnected link";
  }
  return {};
}

SurfaceSummary surface_summary(const FacePoset& x) {
  if (auto why = surface_defect(x); !why.empty()) throw Error(ErrorKind::NotASurface, why);
  auto h = homology_summary(x);
  SurfaceSummary s;
  s.closed = true;
  s.chi = h.euler;
  const long b0 = h.betti[0];
  s.orientable = h.betti[2] == b0;
  s.genus = s.orientable ? (2 * b0 - s.chi) / 2 : 2 * b0 - s.chi;

  auto faces = x.cells_of_dim(2);
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < faces.size(); ++i) slot[faces[i]] = i;
  std::vector<int> orient(faces.size(), 0);
  bool coherent = true;
  for (std::size_t start = 0; start < faces.size() && coherent; ++start) {
    if (orient[start]) continue;
    orient[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && coherent) {
      auto i = queue.front();
      queue.pop_front();
      for (const auto& b : x.boundary(faces[i])) {
        for (auto g : x.cofaces(b.cell)) {
          if (g == faces[i]) continue;
          int sg = 0;
          for (const auto& gb : x.boundary(g))
            if (gb.cell == b.cell) sg = gb.sign;
          const int want = -orient[i] * b.sign * sg;
          auto j = slot.at(g);
          if (!orient[j]) {
            orient[j] = want;
            queue.push_back(j);
          } else if (orient[j] != want) {
            coherent = false;
          }
        }
      }
    }
  }
  if (coherent != s.orientable) throw Error(ErrorKind::InvariantViolation, "orientation search disagrees with b2");
  if (coherent) s.orientation = std::move(orient);
  return s;
}

}  // namespace prodcurves
