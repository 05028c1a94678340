#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prodcurves/face_poset.hpp"

namespace prodcurves {

struct CollapseStep {
  std::string free_cell;
  std::string coface;
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

struct CollapseSequence {
  std::vector<CollapseStep> steps;
  FacePoset remainder;
};

enum class CollapsePolicy { LowestId, HighestId, Shuffled };

// Greedy maximal collapse. LowestId picks the free face with the smallest
// cell index; Shuffled uses `seed` for a reproducible random order.
CollapseSequence maximal_collapse(const FacePoset& x, CollapsePolicy policy = CollapsePolicy::LowestId,
                                  std::uint64_t seed = 0);

// Applies the steps in order; throws BadWitness on the first illegal one.
FacePoset replay(const FacePoset& x, std::span<const CollapseStep> steps);

// Free pairs of the current complex, (free cell, coface), in index order.
std::vector<std::pair<std::size_t, std::size_t>> free_pairs(const FacePoset& x);

enum class SearchOutcome { Yes, No, Unknown };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Unknown;
  std::vector<CollapseStep> witness;  // filled for Yes
  std::size_t nodes = 0;
};

inline constexpr std::size_t default_budget = 1'000'000;

SearchResult search_collapsible(const FacePoset& x, std::size_t budget = default_budget);

// Backtracking over maximal collapse sequences for one whose remainder
// satisfies `accept`.
SearchResult search_maximal(const FacePoset& x, const std::function<bool(const FacePoset&)>& accept,
                            std::size_t budget = default_budget);

enum class RemainderClass { Point, Circle, Torus, Quasi1Manifold, OtherGraph, Other2Dim };

std::string_view to_string(RemainderClass c) noexcept;
RemainderClass classify_remainder(const FacePoset& remainder);

struct Certificate {
  std::string rule;  // "2E.1(i)", "2E.1(ii)", "2E.1(iii)" or "1.7"
  std::vector<std::string> supporting;
  long b1 = 0;
  std::vector<std::size_t> remainder_counts;
  std::vector<CollapseStep> steps;
};

struct ExistentialReading {
  SearchOutcome allowed_remainder_found = SearchOutcome::Unknown;
  std::optional<Certificate> certificate;
  std::size_t nodes = 0;
};

struct EmbeddabilityVerdict {
  long b1 = 0;
  RemainderClass remainder_class = RemainderClass::Other2Dim;
  std::optional<Certificate> certificate;  // universal reading: the greedy sequence
  std::vector<std::size_t> remainder_counts;
  std::vector<CollapseStep> steps;
  bool theorem_applies = false;  // b1 <= 2
  // Search over maximal sequences; only run when b1 <= 2.
  std::optional<ExistentialReading> existential;
  bool readings_disagree = false;
};

EmbeddabilityVerdict certify_nonembeddable(const FacePoset& x, std::size_t budget = default_budget);

}  // namespace prodcurves
