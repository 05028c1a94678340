#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "prodcurves/collapse.hpp"
#include "prodcurves/face_poset.hpp"
#include "prodcurves/graph.hpp"
#include "prodcurves/product.hpp"
#include "prodcurves/simplicial.hpp"

namespace prodcurves {

using Payload = std::variant<Graph, ProductSubcomplex, FacePoset, SimplicialComplex>;
using Params = std::map<std::string, long>;

struct GalleryItem {
  std::string name;
  Params params;
  Payload payload;
  nlohmann::json expected;
};

struct GalleryEntry {
  std::string name;
  std::string description;
  Params defaults;
};

const std::vector<GalleryEntry>& gallery_list();
// Unknown names throw UnknownName; out-of-range params throw BadParams.
GalleryItem make(std::string_view name, const Params& params = {});

FacePoset lower(const Payload& p);
// Dimension of the underlying complex.
int payload_dimension(const Payload& p);

namespace gallery {

Graph theta();
Graph circle(int edges);
Graph path(int edges);
Graph complete_graph(int vertices);
Graph star(int leaves);
SimplicialComplex delta2_boundary();
ProductSubcomplex torus(int m, int n);
ProductSubcomplex torus3(int edges);
ProductSubcomplex theta_theta();
SimplicialComplex dunce_hat();
FacePoset bing_house();
SimplicialComplex klein_bottle();
SimplicialComplex annulus(int segments);
SimplicialComplex disc();
ProductSubcomplex square();
SimplicialComplex fan(int triangles);
ProductSubcomplex example_2B3();
ProductSubcomplex example_2B4(int n);
FacePoset example_2F6();

// Finite truncation of the curve Y (theta with one arc subdivided and
// pendant arcs attached), the arc A* and the disc D* in Y x Y.
struct Staircase2F6 {
  ProductSubcomplex base;  // P x P inside Y x Y
  ProductSubcomplex arc;
  ProductSubcomplex disc;
};
Staircase2F6 staircase_2F6(int truncation);

struct RandomCollapsible {
  FacePoset complex;
  std::vector<CollapseStep> witness;
};
RandomCollapsible random_collapsible(std::uint64_t seed, int size);

}  // namespace gallery

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Re-derives every expected outcome of the item through the live pipeline.
std::vector<CheckResult> verify_item(const GalleryItem& item);

}  // namespace prodcurves
