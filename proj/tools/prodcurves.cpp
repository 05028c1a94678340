#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "prodcurves/algebra.hpp"
#include "prodcurves/classify.hpp"
#include "prodcurves/coneembed.hpp"
#include "prodcurves/error.hpp"
#include "prodcurves/fibers.hpp"
#include "prodcurves/gallery.hpp"
#include "prodcurves/io.hpp"
#include "prodcurves/treeembed.hpp"
#include "report.hpp"

using namespace prodcurves;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  json document;
  Payload payload;
};

Input load(const std::string& path) {
  auto doc = io::read_json(path);
  auto p = io::payload_from_json(doc);
  return {std::move(doc), std::move(p)};
}

const ProductSubcomplex& need_product(const Input& in) {
  if (auto m = std::get_if<ProductSubcomplex>(&in.payload)) return *m;
  throw UsageError("this command needs a product complex (format prodcurves-complex/1)");
}

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << io::canonical(j);
  else
    io::write_atomic(out, io::canonical(j));
}

// "1,3" -> {0, 2}
IndexSet parse_index_set(const std::string& text, std::size_t arity) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(part, &pos);
    } catch (const std::exception&) {
      throw UsageError("--J expects comma-separated factor numbers, got '" + text + "'");
    }
    if (pos != part.size() || v < 1 || static_cast<std::size_t>(v) > arity)
      throw UsageError("--J entry '" + part + "' outside 1.." + std::to_string(arity));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  if (out.empty()) throw UsageError("--J is empty");
  return IndexSet(std::move(out));
}

SimplicialComplex as_simplicial(const Payload& p) {
  if (auto k = std::get_if<SimplicialComplex>(&p)) return *k;
  if (auto m = std::get_if<ProductSubcomplex>(&p); m && m->arity() == 1 && m->dimension() <= 1)
    return to_simplicial(as_graph(*m));
  return triangulate(lower(p));
}

std::optional<SurfaceSummary> maybe_surface(const FacePoset& x) {
  if (x.dimension() != 2 || !surface_defect(x).empty()) return std::nullopt;
  return surface_summary(x);
}

Params parse_params(const std::vector<std::string>& raw) {
  Params out;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got '" + kv + "'");
    std::size_t pos = 0;
    long v = 0;
    const auto value = kv.substr(eq + 1);
    try {
      v = std::stol(value, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != value.size()) throw UsageError("--param value must be an integer, got '" + kv + "'");
    out[kv.substr(0, eq)] = v;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial topology of products of graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::tool_version));

  std::string input, out, strategy = "lowest", j_text, witness_path;
  long claimed_dim = -1;
  std::size_t budget = default_budget;
  std::uint64_t seed_flag = 0;
  bool search = false;
  std::vector<std::string> params;
  std::string gallery_name;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "complex JSON file")->required();
    sub->add_option("--out,-o", out, "write the report here instead of stdout");
  };

  auto* validate_cmd = app.add_subcommand("validate", "load and validate a complex file");
  with_input(validate_cmd);
  auto* betti_cmd = app.add_subcommand("betti", "integer homology");
  with_input(betti_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "ramified / pseudo / simple recognition");
  with_input(classify_cmd);
  classify_cmd->add_option("--n", claimed_dim, "claimed dimension (default: the complex dimension)");
  auto* fibers_cmd = app.add_subcommand("fibers", "projection and vertex fibers for a factor set");
  with_input(fibers_cmd);
  fibers_cmd->add_option("--J", j_text, "comma-separated 1-based factor numbers")->required();
  auto* factorize_cmd = app.add_subcommand("factorize", "circle directions and torus factorization");
  with_input(factorize_cmd);
  auto* collapse_cmd = app.add_subcommand("collapse", "maximal collapse or collapsibility search");
  with_input(collapse_cmd);
  collapse_cmd->add_option("--strategy", strategy, "lowest | highest | shuffled")
      ->check(CLI::IsMember({"lowest", "highest", "shuffled"}));
  collapse_cmd->add_option("--seed", seed_flag, "seed for the shuffled strategy");
  collapse_cmd->add_flag("--search", search, "search for a collapse to a point");
  collapse_cmd->add_option("--budget", budget, "search node cap");
  auto* certify_cmd = app.add_subcommand("certify-nonembed", "certify non-embeddability in a product of two curves");
  with_input(certify_cmd);
  certify_cmd->add_option("--budget", budget, "search node cap");
  auto* trees_cmd = app.add_subcommand("embed-trees", "embed a collapsible 2-complex in a product of two trees");
  with_input(trees_cmd);
  trees_cmd->add_option("--witness", witness_path, "collapse witness JSON (default: search)");
  trees_cmd->add_option("--budget", budget, "search node cap when no witness is given");
  auto* cone_cmd = app.add_subcommand("cone-embed", "embed the cone over a complex in a product of m-ods");
  with_input(cone_cmd);
  auto* gallery_cmd = app.add_subcommand("gallery", "built-in constructions");
  gallery_cmd->require_subcommand(1);
  auto* gallery_list_cmd = gallery_cmd->add_subcommand("list", "list gallery items");
  auto* gallery_build_cmd = gallery_cmd->add_subcommand("build", "build a gallery item");
  gallery_build_cmd->add_option("name", gallery_name, "item name")->required();
  gallery_build_cmd->add_option("--param", params, "parameter k=v (repeatable)");
  gallery_build_cmd->add_option("--out,-o", out, "output file (default: stdout)");
  auto* mesh_cmd = app.add_subcommand("export-mesh", "schematic OFF mesh of a 2-complex");
  mesh_cmd->add_option("input", input, "complex JSON file")->required();
  mesh_cmd->add_option("--out,-o", out, "OFF file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const std::uint64_t seed = io::seed_from_env(seed_flag);

    if (gallery_list_cmd->parsed()) {
      json items = json::array();
      for (const auto& e : gallery_list()) items.push_back({{"name", e.name}, {"description", e.description}, {"params", e.defaults}});
      emit(items, "");
      return exit_ok;
    }
    if (gallery_build_cmd->parsed()) {
      auto given = parse_params(params);
      if (gallery_name == "random_collapsible" && !given.count("seed") && std::getenv("PRODCURVES_SEED"))
        given["seed"] = static_cast<long>(io::seed_from_env(42));
      GalleryItem item;
      try {
        item = make(gallery_name, given);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnknownName || e.kind() == ErrorKind::BadParams) throw UsageError(e.what());
        throw;
      }
      emit(io::to_json(item.payload), out);
      return exit_ok;
    }

    const Input in = load(input);
    const FacePoset x = lower(in.payload);
    json r;

    if (validate_cmd->parsed()) {
      r = report::header("validate", in.document, seed);
      r["valid"] = true;
      r["format_read"] = in.document.at("format");
      r["dimension"] = x.dimension();
      r["cell_counts"] = x.count_by_dim();
    } else if (betti_cmd->parsed()) {
      r = report::header("betti", in.document, seed);
      r["homology"] = report::homology(homology_summary(x));
      if (auto s = maybe_surface(x)) r["surface"] = report::surface(*s);
    } else if (classify_cmd->parsed()) {
      r = report::header("classify", in.document, seed);
      const int n = claimed_dim < 0 ? x.dimension() : static_cast<int>(claimed_dim);
      r["n"] = n;
      r["classification"] = report::classification(classify(x, n));
    } else if (fibers_cmd->parsed()) {
      const auto& m = need_product(in);
      const auto j = parse_index_set(j_text, m.arity());
      const auto jc = j.complement(m.arity());
      r = report::header("fibers", in.document, seed);
      r["J"] = report::index_set(j);
      const auto pj = project(m, j);
      r["projection"] = io::to_json(pj);
      r["projection_classification"] = report::classification(classify(pj, static_cast<int>(j.size())));
      json fibers = json::array();
      if (!jc.empty()) {
        const auto base = project(m, jc);
        for (const auto& tau : base.cells_of_dim(0)) {
          auto f = fiber(m, tau, j);
          json comps = json::array();
          for (const auto& c : f.component_profiles)
            comps.push_back({{"classification", report::classification(c.flags)}, {"b1", c.b1}});
          fibers.push_back({{"base_cell", cell_ids(base.factors(), tau)},
                            {"fiber", io::to_json(f.fiber)},
                            {"components", comps}});
        }
      }
      r["vertex_fibers"] = fibers;
    } else if (factorize_cmd->parsed()) {
      r = report::header("factorize", in.document, seed);
      const auto& m = need_product(in);
      r["classification"] = report::classification(classify(m, m.dimension()));
      r["fibers"] = report::factorization(factorize(m));
    } else if (collapse_cmd->parsed()) {
      r = report::header("collapse", in.document, seed);
      if (search) {
        auto s = search_collapsible(x, budget);
        r["outcome"] = report::to_string(s.outcome);
        r["nodes"] = s.nodes;
        r["witness"] = s.outcome == SearchOutcome::Yes ? io::witness_to_json(s.witness) : json(nullptr);
      } else {
        const auto policy = strategy == "highest"    ? CollapsePolicy::HighestId
                            : strategy == "shuffled" ? CollapsePolicy::Shuffled
                                                     : CollapsePolicy::LowestId;
        auto c = maximal_collapse(x, policy, seed);
        r["strategy"] = strategy;
        r["witness"] = io::witness_to_json(c.steps);
        r["remainder_class"] = to_string(classify_remainder(c.remainder));
        r["remainder_counts"] = c.remainder.count_by_dim();
      }
    } else if (certify_cmd->parsed()) {
      r = report::header("certify-nonembed", in.document, seed);
      r["homology"] = report::homology(homology_summary(x));
      r["verdict"] = report::verdict(certify_nonembeddable(x, budget));
    } else if (trees_cmd->parsed()) {
      std::vector<CollapseStep> witness;
      if (!witness_path.empty()) {
        witness = io::witness_from_json(io::read_json(witness_path));
      } else {
        auto s = search_collapsible(x, budget);
        if (s.outcome != SearchOutcome::Yes) {
          std::cerr << "embed-trees: no collapse to a point found (" << report::to_string(s.outcome) << ")\n";
          return exit_failed;
        }
        witness = std::move(s.witness);
      }
      auto t = embed_in_trees(x, witness);
      auto v = verify_cellwise_map(t.map);
      r = report::header("embed-trees", in.document, seed);
      r["embedding"] = io::embedding_to_json(t.map);
      r["verification"] = {{"passed", v.passed}, {"violation", v.violation}, {"first_cell", v.first_cell},
                           {"second_cell", v.second_cell}};
      emit(r, out);
      return v.passed ? exit_ok : exit_failed;
    } else if (cone_cmd->parsed()) {
      auto e = cone_embed_mods(as_simplicial(in.payload));
      auto v = verify_cellwise_map(e.map);
      r = report::header("cone-embed", in.document, seed);
      r["leaves"] = e.leaves;
      r["embedding"] = io::embedding_to_json(e.map);
      r["verification"] = {{"passed", v.passed}, {"violation", v.violation}, {"first_cell", v.first_cell},
                           {"second_cell", v.second_cell}};
      emit(r, out);
      return v.passed ? exit_ok : exit_failed;
    } else if (mesh_cmd->parsed()) {
      auto mesh = io::export_off(in.payload);
      for (const auto& w : mesh.warnings) std::cerr << "warning: " << w << "\n";
      if (out.empty())
        std::cout << mesh.off;
      else
        io::write_atomic(out, mesh.off);
      return exit_ok;
    }
    emit(r, out);
    return exit_ok;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_failed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  }
}
