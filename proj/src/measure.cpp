#include "taf/measure.hpp"

#include <string>
#include <utility>

#include "taf/embeddings.hpp"
#include "taf/linsolve.hpp"

namespace taf {

InvariantMeasure::InvariantMeasure(long level, std::vector<long> radices, std::vector<Rat> weights)
    : level_(level), radices_(std::move(radices)), weights_(std::move(weights)) {}

Rat InvariantMeasure::weight(const Cylinder& c) const {
  if (c.window != level_)
    raise(Errc::size_mismatch, "cylinder window " + std::to_string(c.window) +
                                   " != measure level " + std::to_string(level_));
  return weight_at(static_cast<long>(word_rank(c.word, radices_)));
}

std::vector<std::vector<long>> enumerate_words(const std::vector<long>& radices) {
  std::vector<std::vector<long>> words;
  std::vector<long> word(radices.size(), 1);
  for (;;) {
    words.push_back(word);
    std::size_t i = word.size();
    while (i > 0 && word[i - 1] == radices[i - 1]) {
      word[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++word[i - 1];
  }
  return words;
}

InvariantMeasure unique_invariant_measure(const CantorSpace& space, long level) {
  if (level < 1) raise(Errc::level_too_small, "measure level must be at least 1");
  const auto radices = space.window_radices(level);
  Int count_big = 1;
  for (long b : radices) count_big *= b;
  if (count_big > 2'000)
    raise(Errc::level_too_large, "too many window words for the dense solver: " + count_big.str());
  const long count = static_cast<long>(count_big);

  // every pair of window words is the projection pair of a basic G-set, so
  // invariance is spanned by the adjacent equalities w_i = w_{i+1}
  RatMatrix rows;
  for (long i = 0; i + 1 < count; ++i) {
    RatRow row(static_cast<std::size_t>(count), Rat(0));
    row[static_cast<std::size_t>(i)] = 1;
    row[static_cast<std::size_t>(i) + 1] = -1;
    rows.push_back(std::move(row));
  }

  RatMatrix basis = nullspace(std::move(rows), count);
  if (basis.size() != 1)
    raise(Errc::degenerate_system,
          "invariance solution space has dimension " + std::to_string(basis.size()));
  RatRow weights = std::move(basis.front());
  Rat total = 0;
  for (const Rat& w : weights) total += w;
  if (total == 0) raise(Errc::degenerate_system, "invariance solution has zero total mass");
  for (Rat& w : weights) w /= total;

  // recheck the full system and the product-measure identity on the solution
  const auto words = enumerate_words(radices);
  for (long i = 0; i < count; ++i) {
    if (weights[static_cast<std::size_t>(i)] != weights.front())
      raise(Errc::degenerate_system, "solved weights are not constant across the level");
    const Rat expected = space.cylinder_measure(Cylinder{level, words[static_cast<std::size_t>(i)]});
    if (weights[static_cast<std::size_t>(i)] != expected)
      raise(Errc::degenerate_system, "solved weight differs from the product measure");
  }

  return InvariantMeasure(level, radices, std::move(weights));
}

}  // namespace taf
