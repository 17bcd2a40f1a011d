#pragma once

#include <optional>
#include <string>

#include "swampstab/gieseker.hpp"
#include "swampstab/level.hpp"
#include "swampstab/parabolic.hpp"

namespace swampstab {

struct ParabolicBlock {
  ParabolicStructure structure;
  std::vector<SubbundleCandidate> candidates;
};

struct LevelBlock {
  CompletedHomDecomposition dec;
  std::vector<Rational> theta;
  Rational delta2 = 0;
  std::vector<SubbundleCandidate> candidates;
};

// Parsed input document. Rationals are strings "p/q"; floats are rejected.
struct ConfigDocument {
  int rank = 0;
  long degree = 0;
  long line_degree = 0;
  int genus = 0;
  std::optional<SwampConfig> config;
  std::vector<NumericFlag> flags;
  std::optional<Rational> delta1;
  std::optional<Rational> delta2;
  std::optional<ParabolicBlock> parabolic;
  std::optional<LevelBlock> level;
};

ConfigDocument parse_document(const std::string& text);
ConfigDocument load_document(const std::string& path);

// Round-trippable rendering of a swamp config plus flags (used by `df`).
std::string document_to_text(const SwampConfig& config,
                             const std::vector<NumericFlag>& flags,
                             const std::optional<Rational>& delta1,
                             const std::optional<Rational>& delta2);

}  // namespace swampstab
