#pragma once

// Pieces of the suite compiled in separate translation units.

#include <vector>

#include "optics/laws/report.hpp"

namespace optics::laws::parts {

std::vector<LawTask> concrete_roundtrips(const Config& cfg);
std::vector<LawTask> profunctor_roundtrips(const Config& cfg);
std::vector<LawTask> traversal_roundtrips(const Config& cfg);

}  // namespace optics::laws::parts
