#include "prodcurves/coneembed.hpp"

#include <algorithm>
#include <map>

#include "prodcurves/error.hpp"

namespace prodcurves {

namespace {

bool is_subset(const Simplex& a, const Simplex& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Every chain of `elems` under strict inclusion, as indices sorted by dimension.
std::vector<std::vector<std::size_t>> chains(const std::vector<Simplex>& elems) {
  std::vector<std::size_t> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return elems[a].size() < elems[b].size(); });
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    out.push_back(cur);
    for (std::size_t j = from; j < order.size(); ++j) {
      const auto& next = elems[order[j]];
      if (next.size() <= elems[cur.back()].size() || !is_subset(elems[cur.back()], next)) continue;
      cur.push_back(order[j]);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    cur = {order[i]};
    grow(grow, i + 1);
  }
  return out;
}

// Order complex on `elems`, vertices named by label; returns the complex and
// the element behind each of its vertices.
std::pair<SimplicialComplex, std::vector<Simplex>> order_complex(const SimplicialComplex& k,
                                                                 const std::vector<Simplex>& elems) {
  std::vector<std::string> names;
  std::map<std::string, Simplex> by_name;
  for (const auto& s : elems) {
    names.push_back(k.label(s));
    by_name[names.back()] = s;
  }
  auto c = SimplicialComplex::from_indexed(names, chains(elems));
  std::vector<Simplex> back;
  for (const auto& n : c.vertex_names()) back.push_back(by_name.at(n));
  return {std::move(c), std::move(back)};
}

CellSet times(const Coord& head, const CellSet& tail) {
  CellSet out;
  for (const auto& t : tail) {
    ProductCell c{head};
    c.insert(c.end(), t.begin(), t.end());
    out.insert(std::move(c));
  }
  return out;
}

struct Level {
  Factors mods;
  CellSet apex;
  std::map<Simplex, CellSet> base;
  std::map<Simplex, CellSet> cone;
};

struct Star {
  Graph g;
  std::size_t center = 0;
};

Star make_star(std::size_t depth, const std::vector<std::string>& leaves) {
  Star s{build_graph("M" + std::to_string(depth), leaves, {}), 0};
  s.center = s.g.add_vertex(s.g.fresh_id("*"));
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const std::string cid = s.g.vertex_id(s.center);
    s.g.add_edge(s.g.fresh_id(cid + "-" + leaves[i]), s.center, i);
  }
  return s;
}

// The cone over a point's star: edge i joins the center and leaf i.
CellSet edge_closure(const Star& s, std::size_t leaf) {
  return {{Coord::vertex(leaf)}, {Coord::vertex(s.center)}, {Coord::edge(leaf)}};
}

Level embed(const SimplicialComplex& q, std::size_t depth) {
  const auto star = make_star(depth, q.vertex_names());
  const Coord center = Coord::vertex(star.center);
  if (q.dimension() == 0) {
    Level out{{star.g}, {{center}}, {}, {}};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      out.base[{v}] = {{Coord::vertex(v)}};
      for (const auto& c : edge_closure(star, v)) out.cone[{v}].insert(c);
    }
    return out;
  }

  std::vector<Simplex> high;
  for (const auto& s : q.simplices())
    if (s.size() >= 2) high.push_back(s);
  auto [dual, dual_elems] = order_complex(q, high);
  std::map<Simplex, std::size_t> dual_index;
  for (std::size_t i = 0; i < dual_elems.size(); ++i) dual_index[dual_elems[i]] = i;
  const Level g = embed(dual, depth + 1);

  Level out;
  out.mods.push_back(star.g);
  out.mods.insert(out.mods.end(), g.mods.begin(), g.mods.end());
  out.apex = times(center, g.apex);

  const std::vector<Simplex> all(q.simplices().begin(), q.simplices().end());
  for (const auto& ch : chains(all)) {
    std::optional<std::size_t> v;
    Simplex rho;
    for (auto i : ch) {
      if (all[i].size() == 1)
        v = all[i][0];
      else
        rho.push_back(dual_index.at(all[i]));
    }
    std::sort(rho.begin(), rho.end());
    CellSet b, c;
    if (v && !rho.empty()) {
      b = times(Coord::vertex(*v), g.cone.at(rho));
      for (const auto& x : edge_closure(star, *v)) {
        for (auto&& y : times(x[0], g.base.at(rho))) b.insert(y);
        for (auto&& y : times(x[0], g.cone.at(rho))) c.insert(y);
      }
    } else if (v) {
      b = times(Coord::vertex(*v), g.apex);
      for (const auto& x : edge_closure(star, *v))
        for (auto&& y : times(x[0], g.apex)) c.insert(y);
    } else {
      b = times(center, g.base.at(rho));
      c = times(center, g.cone.at(rho));
    }
    const auto& top = all[ch.back()];
    for (const auto& s : all) {
      if (!is_subset(top, s)) continue;
      out.base[s].insert(b.begin(), b.end());
      out.cone[s].insert(c.begin(), c.end());
    }
  }
  return out;
}

}  // namespace

Simplex Subdivision::carrier(const Simplex& s) const {
  if (s.empty()) throw Error(ErrorKind::InvalidComplex, "empty simplex");
  Simplex best;
  for (auto v : s)
    if (vertex_simplex.at(v).size() > best.size()) best = vertex_simplex.at(v);
  return best;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  const std::vector<Simplex> all(k.simplices().begin(), k.simplices().end());
  auto [c, back] = order_complex(k, all);
  return {std::move(c), std::move(back)};
}

JoinDecomposition join_decomposition(const SimplicialComplex& k, int skeleton_dim) {
  const int d = k.dimension();
  if (skeleton_dim < 0 || skeleton_dim >= d)
    throw Error(ErrorKind::BadDimensionSplit,
                "k = " + std::to_string(skeleton_dim) + " outside [0, " + std::to_string(d - 1) + "]");
  JoinDecomposition out;
  out.base = k;
  out.k = skeleton_dim;
  out.l = d - skeleton_dim - 1;
  out.skeleton_part = k.skeleton(skeleton_dim);
  std::vector<Simplex> high;
  for (const auto& s : k.simplices())
    if (static_cast<int>(s.size()) - 1 > skeleton_dim) high.push_back(s);
  auto [dual, dual_elems] = order_complex(k, high);
  out.dual_part = std::move(dual);
  std::map<Simplex, std::size_t> dual_index;
  for (std::size_t i = 0; i < dual_elems.size(); ++i) dual_index[dual_elems[i]] = i;
  out.subdivision = barycentric_subdivision(k);
  for (const auto& s : out.subdivision.complex.simplices()) {
    JoinPiece p{s, std::nullopt, std::nullopt};
    Simplex hi;
    for (auto v : s) {
      const auto& t = out.subdivision.vertex_simplex[v];
      if (static_cast<int>(t.size()) - 1 <= skeleton_dim) {
        if (!p.low || t.size() > p.low->size()) p.low = t;
      } else {
        hi.push_back(dual_index.at(t));
      }
    }
    if (!hi.empty()) {
      std::sort(hi.begin(), hi.end());
      p.high = std::move(hi);
    }
    out.pieces.push_back(std::move(p));
  }
  return out;
}

SimplicialComplex cone(const SimplicialComplex& k, std::string* apex_name) {
  std::string apex = "*";
  const auto& names = k.vertex_names();
  while (std::binary_search(names.begin(), names.end(), apex)) apex += "*";
  auto vs = names;
  vs.push_back(apex);
  std::vector<Simplex> facets{{names.size()}};
  for (auto s : k.facets()) {
    s.push_back(names.size());
    facets.push_back(std::move(s));
  }
  if (apex_name) *apex_name = apex;
  return SimplicialComplex::from_indexed(std::move(vs), facets);
}

ModProductEmbedding cone_embed_mods(const SimplicialComplex& k) {
  if (k.dimension() < 0) throw Error(ErrorKind::InvalidComplex, "empty complex");
  const Level lv = embed(k, 1);
  ModProductEmbedding out;
  out.mods = lv.mods;
  for (const auto& m : out.mods) out.leaves.push_back(m.vertex_count() - 1);

  std::string apex;
  const auto ck = cone(k, &apex);
  const auto a = ck.index_of(apex);
  out.map.source = to_face_poset(ck);
  out.map.image.resize(out.map.source.size());
  CellSet all;
  for (const auto& s : ck.simplices()) {
    Simplex base;
    bool coned = false;
    for (auto v : s) {
      if (v == a)
        coned = true;
      else
        base.push_back(k.index_of(ck.vertex_names()[v]));
    }
    std::sort(base.begin(), base.end());
    const CellSet& img = base.empty() ? lv.apex : coned ? lv.cone.at(base) : lv.base.at(base);
    const auto cell = out.map.source.find(ck.label(s));
    if (!cell) throw Error(ErrorKind::InvariantViolation, "cone cell missing");
    out.map.image[*cell] = img;
    all.insert(img.begin(), img.end());
  }
  out.map.target = ProductSubcomplex(std::make_shared<const Factors>(out.mods), std::move(all));
  return out;
}

}  // namespace prodcurves
