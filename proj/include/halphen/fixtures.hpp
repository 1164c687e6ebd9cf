#pragma once

// On-disk inputs: the grading matrices of the 13 rank-8 types and
// characteristic-sequence files.

#include <filesystem>
#include <string>
#include <vector>

#include "halphen/halphen.hpp"
#include "halphen/root_data.hpp"

namespace halphen {

struct NamedGrading {
  std::string name;
  GradingMatrix grading;
};

/// $HALPHEN_FIXTURES when set and nonempty, else `fallback`.
std::filesystem::path fixtures_dir(const std::filesystem::path& fallback);

/// Reads <dir>/gradings.json. ParseError names the offending entry.
std::vector<NamedGrading> load_gradings(const std::filesystem::path& dir);

CharacteristicSequence load_sequence(const std::filesystem::path& file);

std::string read_text(const std::filesystem::path& file);

}  // namespace halphen
