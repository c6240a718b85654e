#include "legruling/corpus.hpp"

#include <algorithm>
#include <cstdlib>

#include "legruling/front_io.hpp"

namespace legruling {

std::vector<CorpusEntry> bundled_corpus() {
  const FrontDiagram trefoil{"trefoil", {L(1), L(3), X(2), X(2), X(2), R(1), R(1)}};
  FrontDiagram sum = connected_sum(trefoil, trefoil);
  sum.name = "trefoil_sum";
  return {
      {{"unknot", {L(1), R(1)}}, "standard unknot, tb = -1"},
      {{"stabilized_unknot", {L(1), L(1), R(2), R(1)}}, "zigzag stabilization of the unknot, tb = -2, no rulings"},
      {{"unlink2", {L(1), L(2), R(2), R(1)}}, "two nested saucers, a 2-component unlink"},
      {trefoil, "right-handed trefoil at maximal tb = 1"},
      {{"5_1", {L(1), L(3), X(2), X(2), X(2), X(2), X(2), R(1), R(1)}}, "positive (5,2) torus knot, tb = 3"},
      {sum, "trefoil # trefoil spliced at the outer cusps, tb = 3"},
  };
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".front") {
      out.push_back({read_front(entry.path()), entry.path().filename().string()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front.name < b.front.name; });
  return out;
}

std::vector<CorpusEntry> active_corpus() {
  if (const char* dir = std::getenv(kCorpusEnvVar); dir != nullptr && *dir != '\0') return load_corpus(dir);
  return bundled_corpus();
}

std::optional<FrontDiagram> find_corpus_front(std::string_view name) {
  for (auto& entry : active_corpus()) {
    if (entry.front.name == name) return std::move(entry.front);
  }
  return std::nullopt;
}

}  // namespace legruling
