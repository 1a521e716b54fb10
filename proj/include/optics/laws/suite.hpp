#pragma once

// The assembled law suite. Each function returns deferred checks; run them
// with run_tasks. Compiled once in the optics_laws library.

#include <cstddef>
#include <vector>

#include "optics/laws/report.hpp"

namespace optics::laws {

/// Profunctor, cartesian, cocartesian and monoidal laws at every registry
/// entry providing the capability.
std::vector<LawTask> structure_law_tasks(const Config& cfg);

/// Concrete/profunctor round trips for adapters, lenses, prisms and
/// traversals: example optics, random optics, and composites.
std::vector<LawTask> roundtrip_tasks(const Config& cfg);

/// flip c2p k as a morphism from each concrete entry to the function arrow.
std::vector<LawTask> morphism_tasks(const Config& cfg);

/// The lemmas on products, sums, traverse and FunList.
std::vector<LawTask> lemma_tasks(const Config& cfg);

/// traverseOf inorderP countOdd against the direct inorder traversal and the
/// in-order fold, on `trees` random trees of up to 31 nodes.
std::vector<LawTask> traversal_oracle_tasks(const Config& cfg, std::size_t trees = 500);

/// Fault injections, each expected to fail its targeted check.
std::vector<LawTask> mutation_tasks(const Config& cfg);

/// Optional lens laws on monomorphic lenses.
std::vector<LawTask> wellbehaved_tasks(const Config& cfg);

/// structure + round trips + morphisms + lemmas + traversal oracle.
std::vector<LawTask> core_tasks(const Config& cfg);

}  // namespace optics::laws
