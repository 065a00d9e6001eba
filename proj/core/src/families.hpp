#pragma once

// Shared between varmap.cpp and encoder.cpp: which chain families a
// configuration needs and the names of their auxiliary blocks.

#include <string>
#include <vector>

#include "holesat/encoder.hpp"

namespace holesat::detail {

struct FamilySpec {
  Target target;
  // cap[j] / cup[j] name the block of j-point chains (j >= 4); empty when
  // the family has no block of that length.
  std::vector<std::string> cap, cup;
};

// Throws UnsupportedVariant / PreconditionViolated for invalid configs.
void validate(const EncodingConfig &cfg);

// Deduplicated targets in a fixed order: holes first, then gons, each by k.
std::vector<Target> normalized_targets(const EncodingConfig &cfg);

// Chain families for variants O2..O4 (empty for T and O1).
std::vector<FamilySpec> chain_families(const EncodingConfig &cfg);

} // namespace holesat::detail
