#pragma once

#include <stdexcept>
#include <string>

namespace taf {

enum class Errc {
  invalid_profile,
  invalid_point,
  not_representable,
  not_gap_point,
  not_tail_equivalent,
  size_mismatch,
  degenerate_system,
  prime_not_infinite,
  wrong_shape,
  level_too_small,
  level_too_large,
  invalid_scaling,
  not_invertible,
  level_order,
  parse_error,
  unknown_command,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace taf
