#include "halphen/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "halphen/error.hpp"

namespace halphen {

namespace {
constexpr int kGradingsVersion = 1;
}

std::filesystem::path fixtures_dir(const std::filesystem::path& fallback) {
  const char* env = std::getenv("HALPHEN_FIXTURES");
  if (env && *env) return env;
  return fallback;
}

std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot open " + file.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<NamedGrading> load_gradings(const std::filesystem::path& dir) {
  const auto path = dir / "gradings.json";
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  if (doc.value("version", 0) != kGradingsVersion)
    throw ParseError(path.string() + ": unsupported version");
  std::vector<NamedGrading> out;
  for (const auto& entry : doc.at("types")) {
    const std::string name = entry.value("name", std::string("?"));
    try {
      out.push_back({name, entry.at("grading").get<GradingMatrix>()});
      if (out.back().grading.configuration().canonical().name() != FiberConfiguration::parse(name).canonical().name())
        throw DomainError("marks describe " + out.back().grading.configuration().name());
    } catch (const std::exception& e) {
      throw ParseError("grading matrix " + name + ": " + e.what());
    }
  }
  return out;
}

CharacteristicSequence load_sequence(const std::filesystem::path& file) {
  try {
    return CharacteristicSequence::parse(read_text(file));
  } catch (const ParseError& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

}  // namespace halphen
