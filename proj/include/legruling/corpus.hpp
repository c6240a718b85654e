#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legruling/front.hpp"

namespace legruling {

/// Environment variable naming a directory of `.front` files that replaces
/// the bundled corpus.
inline constexpr const char* kCorpusEnvVar = "LEGRULING_CORPUS_DIR";

struct CorpusEntry {
  FrontDiagram front;
  std::string description;
};

/// unknot, stabilized unknot, 2-component unlink, right trefoil, the (5,2)
/// torus knot 5_1 and trefoil # trefoil, all at maximal tb except the
/// stabilized unknot.
std::vector<CorpusEntry> bundled_corpus();

/// Every `*.front` file in `dir`, sorted by name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

/// The directory from the environment when set, the bundled corpus otherwise.
std::vector<CorpusEntry> active_corpus();

std::optional<FrontDiagram> find_corpus_front(std::string_view name);

}  // namespace legruling
