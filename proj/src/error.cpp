#include "taf/error.hpp"

namespace taf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_profile: return "InvalidProfile";
    case Errc::invalid_point: return "InvalidPoint";
    case Errc::not_representable: return "NotRepresentable";
    case Errc::not_gap_point: return "NotGapPoint";
    case Errc::not_tail_equivalent: return "NotTailEquivalent";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::degenerate_system: return "DegenerateSystem";
    case Errc::prime_not_infinite: return "PrimeNotInfinite";
    case Errc::wrong_shape: return "WrongShape";
    case Errc::level_too_small: return "LevelTooSmall";
    case Errc::level_too_large: return "LevelTooLarge";
    case Errc::invalid_scaling: return "InvalidScaling";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::level_order: return "LevelOrder";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_command: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace taf
