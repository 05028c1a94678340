#pragma once

#include <json.hpp>

#include "prodcurves/algebra.hpp"
#include "prodcurves/classify.hpp"
#include "prodcurves/collapse.hpp"
#include "prodcurves/fibers.hpp"

namespace prodcurves::report {

using nlohmann::json;

json header(std::string_view command, const json& input, std::uint64_t seed);

json classification(const ClassificationFlags& f);
json homology(const HomologySummary& h);
json surface(const SurfaceSummary& s);
json factorization(const FactorizationReport& r);
json verdict(const EmbeddabilityVerdict& v);
json steps(std::span<const CollapseStep> s);
json index_set(const IndexSet& j);  // 1-based

std::string_view to_string(SearchOutcome o);

}  // namespace prodcurves::report
