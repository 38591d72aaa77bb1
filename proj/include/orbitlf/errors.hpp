#pragma once

#include <stdexcept>
#include <string>

namespace orbitlf {

// Precondition violations carry a stable code so callers (CLI, tests) can
// distinguish configuration mistakes from genuine computation failures.
enum class errc {
  not_prime,
  even_prime,
  modulus_too_large,
  not_a_divisor,
  kappa_out_of_range,
  not_coprime,
  eta_not_imprimitive,
  eta_equal,
  eta_principal,
  j_out_of_range,
  a_out_of_range,
  pole_at_one,
  principal_character,
  non_positive_argument,
  box_too_large,
  delta_out_of_range,
  twist_not_coprime,
  odd_ell,
  x_too_small,
  bad_parameters,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace orbitlf
