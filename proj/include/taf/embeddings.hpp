#pragma once

#include <span>
#include <vector>

#include "taf/cantor.hpp"
#include "taf/matrix_units.hpp"

namespace taf {

enum class StepKind { refinement, standard };

/// One unital embedding T_n -> T_{n t}: refinement replaces every entry by a
/// scalar t x t block, standard stacks t copies down the diagonal.
struct EmbeddingStep {
  StepKind kind = StepKind::refinement;
  long multiplicity = 1;
  long source_size = 1;

  long target_size() const { return source_size * multiplicity; }

  bool operator==(const EmbeddingStep&) const = default;
};

EmbeddingStep refinement(long multiplicity, long source_size);
EmbeddingStep standard(long multiplicity, long source_size);

/// Image of a single matrix unit; throws Error(size_mismatch) when the unit
/// does not live in the step's source algebra.
TriElement apply_step(const EmbeddingStep& step, const MatrixUnit& e);
TriElement apply_step(const EmbeddingStep& step, const TriElement& x);

/// Left-to-right composition of steps; the empty chain is the identity.
TriElement compose_chain(std::span<const EmbeddingStep> steps, const MatrixUnit& e);
TriElement compose_chain(std::span<const EmbeddingStep> steps, const TriElement& x);

/// The alternating direct system of a profile pair: refinement by r_1,
/// standard by s_1, refinement by r_2, standard by s_2, ... Stage N is the
/// algebra reached after N refinement/standard pairs; its matrix units are
/// indexed by window-N words in the order (s_N,...,s_1,r_1,...,r_N), new
/// standard factors prepending and new refinement factors appending.
class DirectSystem {
 public:
  DirectSystem(SequenceProfile r, SequenceProfile s);

  const CantorSpace& space() const { return space_; }

  /// d(N) = s_N ... s_1 r_1 ... r_N.
  Int stage_size(long pairs) const;

  /// The first 2*pairs embedding steps. Throws Error(level_too_large) if a
  /// stage size does not fit in long.
  std::vector<EmbeddingStep> chain(long pairs) const;

 private:
  CantorSpace space_;
};

struct LexPosition {
  Int position;    // 1-based rank of the window word
  Int stage_size;  // number of window words at this level
};

/// Rank of the diagonal unit carrying x's window word among the stage-N
/// matrix units. Requires the supports of x inside [-level, level].
LexPosition lex_position(const DirectSystem& sys, const Point& x, long level);

/// The diagonal projection carrying x's window word, as a matrix unit of the
/// stage algebra. Requires the stage size to fit in long.
MatrixUnit diagonal_unit(const DirectSystem& sys, const Point& x, long level);

/// Matrix-unit form of the ordered relation at one level: there is an upper
/// triangular unit with initial projection at y's position and final
/// projection at x's.
bool mu_in_R(const DirectSystem& sys, const Point& x, const Point& y, long level);

/// Rank of a word among all words over the radices, both most significant
/// first; inverse of decode_rank.
Int word_rank(const std::vector<long>& word, const std::vector<long>& radices);
std::vector<long> decode_rank(Int rank0, const std::vector<long>& radices);

}  // namespace taf
