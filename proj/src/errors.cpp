#include "orbitlf/errors.hpp"

namespace orbitlf {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::even_prime: return "EvenPrime";
    case errc::modulus_too_large: return "ModulusTooLarge";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::kappa_out_of_range: return "KappaOutOfRange";
    case errc::not_coprime: return "NotCoprime";
    case errc::eta_not_imprimitive: return "EtaNotImprimitive";
    case errc::eta_equal: return "EtaEqual";
    case errc::eta_principal: return "EtaPrincipal";
    case errc::j_out_of_range: return "JOutOfRange";
    case errc::a_out_of_range: return "AOutOfRange";
    case errc::pole_at_one: return "PoleAtOne";
    case errc::principal_character: return "PrincipalCharacter";
    case errc::non_positive_argument: return "NonPositiveArgument";
    case errc::box_too_large: return "BoxTooLarge";
    case errc::delta_out_of_range: return "DeltaOutOfRange";
    case errc::twist_not_coprime: return "TwistNotCoprime";
    case errc::odd_ell: return "OddEll";
    case errc::x_too_small: return "XTooSmall";
    case errc::bad_parameters: return "BadParameters";
  }
  return "UnknownError";
}

}  // namespace orbitlf
