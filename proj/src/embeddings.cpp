#include "taf/embeddings.hpp"

#include <limits>
#include <string>
#include <utility>

namespace taf {

namespace {

void check_multiplicity(long multiplicity, long source_size) {
  if (multiplicity < 1 || source_size < 1)
    raise(Errc::size_mismatch, "embedding parameters must be positive");
}

}  // namespace

EmbeddingStep refinement(long multiplicity, long source_size) {
  check_multiplicity(multiplicity, source_size);
  return EmbeddingStep{StepKind::refinement, multiplicity, source_size};
}

EmbeddingStep standard(long multiplicity, long source_size) {
  check_multiplicity(multiplicity, source_size);
  return EmbeddingStep{StepKind::standard, multiplicity, source_size};
}

TriElement apply_step(const EmbeddingStep& step, const MatrixUnit& e) {
  if (e.size != step.source_size)
    raise(Errc::size_mismatch, "unit of size " + std::to_string(e.size) +
                                   " fed to a step from size " + std::to_string(step.source_size));
  const long n = step.source_size, t = step.multiplicity;
  TriElement image(step.target_size());
  if (step.kind == StepKind::refinement) {
    for (long k = 1; k <= t; ++k)
      image.add_term(MatrixUnit{(e.row - 1) * t + k, (e.col - 1) * t + k, n * t},
                     Coefficient::one());
  } else {
    for (long k = 0; k < t; ++k)
      image.add_term(MatrixUnit{e.row + k * n, e.col + k * n, n * t}, Coefficient::one());
  }
  return image;
}

TriElement apply_step(const EmbeddingStep& step, const TriElement& x) {
  if (x.size() != step.source_size)
    raise(Errc::size_mismatch, "element of size " + std::to_string(x.size()) +
                                   " fed to a step from size " + std::to_string(step.source_size));
  TriElement image(step.target_size());
  for (const auto& [e, c] : x.terms()) image += c * apply_step(step, e);
  return image;
}

TriElement compose_chain(std::span<const EmbeddingStep> steps, const MatrixUnit& e) {
  return compose_chain(steps, TriElement::unit(e));
}

TriElement compose_chain(std::span<const EmbeddingStep> steps, const TriElement& x) {
  TriElement image = x;
  for (const EmbeddingStep& step : steps) image = apply_step(step, image);
  return image;
}

DirectSystem::DirectSystem(SequenceProfile r, SequenceProfile s)
    : space_(std::move(r), std::move(s)) {}

Int DirectSystem::stage_size(long pairs) const {
  if (pairs < 0) raise(Errc::level_too_small, "negative stage");
  return space_.s_profile().partial_product(pairs) * space_.r_profile().partial_product(pairs);
}

std::vector<EmbeddingStep> DirectSystem::chain(long pairs) const {
  if (pairs < 0) raise(Errc::level_too_small, "negative stage");
  constexpr long cap = std::numeric_limits<long>::max();
  std::vector<EmbeddingStep> steps;
  long size = 1;
  for (long k = 1; k <= pairs; ++k) {
    const long rk = space_.r_profile().term(k);
    const long sk = space_.s_profile().term(k);
    if (size > cap / rk || size * rk > cap / sk)
      raise(Errc::level_too_large, "stage size overflows at pair " + std::to_string(k));
    steps.push_back(refinement(rk, size));
    size *= rk;
    steps.push_back(standard(sk, size));
    size *= sk;
  }
  return steps;
}

Int word_rank(const std::vector<long>& word, const std::vector<long>& radices) {
  if (word.size() != radices.size())
    raise(Errc::size_mismatch, "word length " + std::to_string(word.size()) +
                                   " != radix count " + std::to_string(radices.size()));
  Int rank = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1 || word[i] > radices[i])
      raise(Errc::invalid_point, "digit " + std::to_string(word[i]) + " outside [1, " +
                                     std::to_string(radices[i]) + "]");
    rank = rank * radices[i] + (word[i] - 1);
  }
  return rank;
}

std::vector<long> decode_rank(Int rank0, const std::vector<long>& radices) {
  if (rank0 < 0) raise(Errc::invalid_point, "negative rank");
  std::vector<long> word(radices.size(), 1);
  for (std::size_t i = radices.size(); i > 0; --i) {
    const Int radix = radices[i - 1];
    word[i - 1] = static_cast<long>(rank0 % radix) + 1;
    rank0 /= radix;
  }
  if (rank0 != 0) raise(Errc::invalid_point, "rank " + rank0.str() + " beyond the word range");
  return word;
}

LexPosition lex_position(const DirectSystem& sys, const Point& x, long level) {
  const CantorSpace& space = sys.space();
  const Point c = space.canonical(x);
  if (space.max_support(c) > level)
    raise(Errc::level_too_small, "point support exceeds level " + std::to_string(level));
  const auto word = space.window_word(c, level);
  const auto radices = space.window_radices(level);
  return LexPosition{word_rank(word, radices) + 1, sys.stage_size(level)};
}

MatrixUnit diagonal_unit(const DirectSystem& sys, const Point& x, long level) {
  const LexPosition pos = lex_position(sys, x, level);
  if (pos.stage_size > std::numeric_limits<long>::max())
    raise(Errc::level_too_large, "stage size does not fit a matrix dimension");
  const long p = static_cast<long>(pos.position);
  return make_unit(p, p, static_cast<long>(pos.stage_size));
}

bool mu_in_R(const DirectSystem& sys, const Point& x, const Point& y, long level) {
  return lex_position(sys, x, level).position <= lex_position(sys, y, level).position;
}

}  // namespace taf
