#include "prodcurves/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "prodcurves/algebra.hpp"
#include "prodcurves/error.hpp"

namespace prodcurves::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaViolation, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) schema(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& s : j) out.push_back(str(s, what));
  return out;
}

void expect_format(const json& j, std::string_view format) {
  if (str(field(j, "format"), "format") != format) schema("expected format " + std::string(format));
}

json factor_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({{"id", e.id}, {"tail", g.vertex_id(e.tail)}, {"head", g.vertex_id(e.head)}});
  return {{"name", g.name()}, {"vertices", g.vertices()}, {"edges", edges}};
}

Graph factor_from_json(const json& j) {
  std::vector<EdgeSpec> es;
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) schema("edges must be an array");
  for (const auto& e : edges)
    es.push_back({str(field(e, "id"), "edge id"), str(field(e, "tail"), "tail"), str(field(e, "head"), "head")});
  return build_graph(str(field(j, "name"), "factor name"), strings(field(j, "vertices"), "vertices"), std::move(es));
}

json factors_json(const Factors& f) {
  json out = json::array();
  for (const auto& g : f) out.push_back(factor_json(g));
  return out;
}

Factors factors_from_json(const json& j) {
  if (!j.is_array() || j.empty()) schema("factors must be a nonempty array");
  Factors f;
  for (const auto& g : j) f.push_back(factor_from_json(g));
  return f;
}

json cell_json(const Factors& f, const ProductCell& c) { return cell_ids(f, c); }

ProductSubcomplex complex_from_json(const json& j) {
  auto f = factors_from_json(field(j, "factors"));
  std::vector<std::vector<std::string>> tops;
  const auto& t = field(j, "top_cells");
  if (!t.is_array()) schema("top_cells must be an array");
  for (const auto& c : t) {
    tops.push_back(strings(c, "top cell"));
    if (tops.back().size() != f.size()) schema("top cell arity differs from the factor count");
  }
  return build_product(std::move(f), tops);
}

std::string fixed(double v) {
  if (std::abs(v) < 5e-7) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

json to_json(const Graph& g) {
  json tops = json::array();
  for (const auto& e : g.edges()) tops.push_back({e.id});
  const auto deg = g.degrees();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (deg[v] == 0) tops.push_back({g.vertex_id(v)});
  return {{"format", complex_format}, {"factors", json::array({factor_json(g)})}, {"top_cells", tops}};
}

json to_json(const ProductSubcomplex& m) {
  json tops = json::array();
  for (const auto& c : m.maximal_cells()) tops.push_back(cell_json(m.factors(), c));
  return {{"format", complex_format}, {"factors", factors_json(m.factors())}, {"top_cells", tops}};
}

json to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (const auto& s : k.facets()) {
    json names = json::array();
    for (auto v : s) names.push_back(k.vertex_names()[v]);
    facets.push_back(names);
  }
  return {{"format", simplicial_format}, {"simplices", facets}};
}

json to_json(const FacePoset& x) {
  json cells = json::array();
  for (std::size_t c = 0; c < x.size(); ++c) {
    json b = json::array();
    for (const auto& f : x.boundary(c)) b.push_back({x.label(f.cell), f.sign});
    cells.push_back({{"id", x.label(c)}, {"dim", x.dim(c)}, {"boundary", b}});
  }
  return {{"format", poset_format}, {"cells", cells}};
}

json to_json(const Payload& p) {
  return std::visit([](const auto& v) { return to_json(v); }, p);
}

Payload payload_from_json(const json& j) {
  const auto format = str(field(j, "format"), "format");
  if (format == complex_format) return complex_from_json(j);
  if (format == simplicial_format) {
    std::vector<std::vector<std::string>> facets;
    const auto& s = field(j, "simplices");
    if (!s.is_array() || s.empty()) schema("simplices must be a nonempty array");
    for (const auto& f : s) facets.push_back(strings(f, "simplex"));
    return SimplicialComplex::from_facets(facets);
  }
  if (format == poset_format) {
    FacePoset x;
    const auto& cells = field(j, "cells");
    if (!cells.is_array()) schema("cells must be an array");
    for (const auto& c : cells) {
      const auto& d = field(c, "dim");
      if (!d.is_number_integer() || d.get<int>() < 0) schema("dim must be a nonnegative integer");
      std::vector<SignedFace> b;
      const auto& bj = field(c, "boundary");
      if (!bj.is_array()) schema("boundary must be an array");
      for (const auto& f : bj) {
        if (!f.is_array() || f.size() != 2 || !f[1].is_number_integer()) schema("boundary entries are [id, sign]");
        auto face = x.find(str(f[0], "face id"));
        if (!face) schema("face '" + f[0].get<std::string>() + "' must precede its coface");
        b.push_back({*face, f[1].get<int>()});
      }
      x.add_cell(str(field(c, "id"), "cell id"), d.get<int>(), std::move(b));
    }
    validate(x);
    return x;
  }
  schema("unknown format '" + format + "'");
}

json witness_to_json(std::span<const CollapseStep> steps) {
  json s = json::array();
  for (const auto& st : steps) s.push_back({st.free_cell, st.coface});
  return {{"format", witness_format}, {"steps", s}};
}

std::vector<CollapseStep> witness_from_json(const json& j) {
  expect_format(j, witness_format);
  std::vector<CollapseStep> out;
  const auto& s = field(j, "steps");
  if (!s.is_array()) schema("steps must be an array");
  for (const auto& st : s) {
    auto pair = strings(st, "step");
    if (pair.size() != 2) schema("steps are [free_cell, coface] pairs");
    out.push_back({pair[0], pair[1]});
  }
  return out;
}

json embedding_to_json(const CellwiseMap& h) {
  json map = json::object();
  for (std::size_t c = 0; c < h.source.size(); ++c) {
    json cells = json::array();
    for (const auto& t : h.image[c]) cells.push_back(cell_json(h.target.factors(), t));
    map[h.source.label(c)] = cells;
  }
  auto target = to_json(h.target);
  return {{"format", embedding_format},
          {"source", to_json(h.source)},
          {"factors", target["factors"]},
          {"top_cells", target["top_cells"]},
          {"map", map}};
}

CellwiseMap embedding_from_json(const json& j) {
  expect_format(j, embedding_format);
  auto src = payload_from_json(field(j, "source"));
  if (!std::holds_alternative<FacePoset>(src)) schema("source must be a poset");
  json target = {{"format", complex_format}, {"factors", field(j, "factors")}, {"top_cells", field(j, "top_cells")}};
  CellwiseMap h{std::get<FacePoset>(std::move(src)), complex_from_json(target), {}};
  const auto& map = field(j, "map");
  if (!map.is_object()) schema("map must be an object");
  h.image.resize(h.source.size());
  for (const auto& [label, cells] : map.items()) {
    auto c = h.source.find(label);
    if (!c) schema("map names unknown source cell '" + label + "'");
    if (!cells.is_array()) schema("map entries are arrays of cells");
    for (const auto& t : cells) {
      auto ids = strings(t, "target cell");
      if (ids.size() != h.target.arity()) schema("target cell arity differs from the factor count");
      h.image[*c].insert(make_cell(h.target.factors(), ids));
    }
  }
  return h;
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(const json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical(j))));
  return buf;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    schema(path.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("PRODCURVES_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const auto v = std::strtoull(s, &end, 10);
  return *end ? fallback : static_cast<std::uint64_t>(v);
}

Mesh export_off(const Payload& p) {
  const auto* m = std::get_if<ProductSubcomplex>(&p);
  if (m && m->arity() != 2) throw Error(ErrorKind::NotExportable, "mesh export needs a product of two graphs");
  Mesh mesh;
  FacePoset x;
  std::vector<std::array<double, 3>> where;
  const double tau = 2 * std::numbers::pi;
  if (m) {
    auto lp = lower_product(*m);
    x = std::move(lp.poset);
    // Angles follow the sorted vertex ids of each factor.
    std::array<std::map<std::size_t, double>, 2> angle;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& g = m->factors()[i];
      std::vector<std::size_t> order(g.vertex_count());
      for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.vertex_id(a) < g.vertex_id(b); });
      for (std::size_t r = 0; r < order.size(); ++r) angle[i][order[r]] = tau * static_cast<double>(r) / static_cast<double>(order.size());
    }
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x.dim(c) != 0) {
        where.push_back({});
        continue;
      }
      const double a = angle[0][lp.cells[c][0].index], b = angle[1][lp.cells[c][1].index];
      where.push_back({std::cos(a), std::sin(a), std::cos(b) + 0.3 * std::sin(b)});
    }
  } else {
    x = lower(p);
    const auto vs = x.cells_of_dim(0);
    for (std::size_t c = 0; c < x.size(); ++c) where.push_back({});
    for (std::size_t r = 0; r < vs.size(); ++r) {
      const double a = tau * static_cast<double>(r) / static_cast<double>(vs.size());
      where[vs[r]] = {std::cos(a), std::sin(a), std::cos(2 * a) + 0.3 * std::sin(3 * a)};
    }
  }
  if (x.dimension() != 2) throw Error(ErrorKind::NotExportable, "mesh export needs a 2-dimensional complex");

  const auto faces = x.cells_of_dim(2);
  std::vector<int> orient(faces.size(), 1);
  if (auto why = surface_defect(x); why.empty()) {
    auto s = surface_summary(x);
    if (s.orientable)
      orient = s.orientation;
    else
      mesh.warnings.push_back("nonorientable surface: faces carry no coherent orientation");
  } else {
    mesh.warnings.push_back("not a closed surface (" + why + "): writing a polygon soup");
  }

  const auto verts = x.cells_of_dim(0);
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  std::ostringstream out;
  out << "OFF\n" << verts.size() << ' ' << faces.size() << ' ' << x.cells_of_dim(1).size() << '\n';
  for (auto v : verts) out << fixed(where[v][0]) << ' ' << fixed(where[v][1]) << ' ' << fixed(where[v][2]) << '\n';
  for (std::size_t i = 0; i < faces.size(); ++i) {
    auto poly = polygon_vertices(x, faces[i]);
    if (orient[i] < 0) std::reverse(poly.begin(), poly.end());
    out << poly.size();
    for (auto v : poly) out << ' ' << index.at(v);
    out << '\n';
  }
  mesh.off = out.str();
  return mesh;
}

}  // namespace prodcurves::io
