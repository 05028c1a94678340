#include "report.hpp"

#include "prodcurves/io.hpp"

namespace prodcurves::report {

namespace {

json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json certificate(const Certificate& c) {
  return {{"rule", c.rule},
          {"supporting", c.supporting},
          {"b1", c.b1},
          {"remainder_counts", c.remainder_counts},
          {"steps", steps(c.steps)}};
}

}  // namespace

json header(std::string_view command, const json& input, std::uint64_t seed) {
  return {{"format", io::report_format},
          {"tool_version", io::tool_version},
          {"command", command},
          {"seed", seed},
          {"input_digest", io::digest(input)}};
}

json classification(const ClassificationFlags& f) {
  return {{"top_cover", f.top_cover},
          {"ramified", f.ramified},
          {"pseudo", f.pseudo},
          {"simple", f.simple ? json(*f.simple) : json(nullptr)},
          {"free_faces", f.free_faces},
          {"combinatorial_components", f.combinatorial_components}};
}

json homology(const HomologySummary& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) {
    json d = json::array();
    for (const auto& v : t) d.push_back(big(v));
    torsion.push_back(d);
  }
  return {{"betti", h.betti}, {"torsion", torsion}, {"euler", h.euler}};
}

json surface(const SurfaceSummary& s) {
  json out{{"closed", s.closed}, {"orientable", s.orientable}, {"chi", s.chi}};
  out[s.orientable ? "genus" : "crosscaps"] = s.genus;
  return out;
}

json index_set(const IndexSet& j) {
  json out = json::array();
  for (auto i : j.members()) out.push_back(i + 1);
  return out;
}

json factorization(const FactorizationReport& r) {
  json tori = json::array();
  for (const auto& t : r.torus_factors) tori.push_back(io::to_json(t));
  const auto& d = r.rank_data;
  return {{"J_M", index_set(r.j_m)},
          {"is_full_torus", r.is_full_torus},
          {"torus_factors", tori},
          {"residual", r.residual ? io::to_json(*r.residual) : json(nullptr)},
          {"rank_data",
           {{"b1", d.b1},
            {"chosen_vertices", d.chosen_vertices},
            {"fiber_b1", d.fiber_b1},
            {"fiber_b1_sum", d.fiber_b1_sum},
            {"connected", d.connected},
            {"rank_at_least_n", d.rank_at_least_n},
            {"rank_at_least_fiber_sum", d.rank_at_least_fiber_sum},
            {"circle_bound", d.circle_bound}}}};
}

json steps(std::span<const CollapseStep> s) {
  json out = json::array();
  for (const auto& st : s) out.push_back(json::array({st.free_cell, st.coface}));
  return out;
}

std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Yes: return "yes";
    case SearchOutcome::No: return "no";
    case SearchOutcome::Unknown: return "unknown";
  }
  return "unknown";
}

json verdict(const EmbeddabilityVerdict& v) {
  json out{{"b1", v.b1},
           {"remainder_class", prodcurves::to_string(v.remainder_class)},
           {"remainder_counts", v.remainder_counts},
           {"steps", steps(v.steps)},
           {"theorem_applies", v.theorem_applies},
           {"certificate", v.certificate ? certificate(*v.certificate) : json(nullptr)},
           {"readings_disagree", v.readings_disagree}};
  if (v.existential) {
    const auto& e = *v.existential;
    out["existential"] = {{"allowed_remainder_found", to_string(e.allowed_remainder_found)},
                          {"certificate", e.certificate ? certificate(*e.certificate) : json(nullptr)},
                          {"nodes", e.nodes}};
  } else {
    out["existential"] = nullptr;
  }
  return out;
}

}  // namespace prodcurves::report
