#include "orbitlf/character.hpp"

#include <cmath>
#include <numeric>

#include "orbitlf/errors.hpp"

namespace orbitlf {

DirichletCharacter::DirichletCharacter(ModulusPtr m, std::uint64_t residue)
    : mod_(std::move(m)), a_(residue % mod_->group_order()) {
  if (a_ == 0) {
    height_ = 0;
  } else {
    int v = padic_valuation(a_, mod_->p());
    height_ = mod_->k() - std::min(v, mod_->k());
  }
}

std::uint64_t DirichletCharacter::characteristic() const {
  return std::gcd(a_, mod_->p() - 1);
}

UnitRootValue DirichletCharacter::eval(std::uint64_t n) const {
  std::uint32_t i = mod_->index(n);
  if (i == PrimePowerModulus::npos) return UnitRootValue::zero();
  std::uint64_t qk = mod_->group_order();
  return UnitRootValue::root(mul_mod(a_, i, qk), qk);
}

cplx DirichletCharacter::operator()(std::uint64_t n) const {
  std::uint32_t i = mod_->index(n);
  if (i == PrimePowerModulus::npos) return {0.0, 0.0};
  return mod_->unit_root(mul_mod(a_, i, mod_->group_order()));
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::uint64_t qk = mod_->group_order();
  return DirichletCharacter(mod_, (qk - a_) % qk);
}

DirichletCharacter DirichletCharacter::times(const DirichletCharacter& other) const {
  require(mod_->q() == other.mod_->q(), errc::bad_parameters,
          "character product across different moduli");
  return DirichletCharacter(mod_, a_ + other.a_);
}

UnitRootValue char_eval(const DirichletCharacter& chi, std::uint64_t n) { return chi.eval(n); }

cplx gauss_sum(const DirichletCharacter& chi, std::uint64_t n) {
  const PrimePowerModulus& m = chi.modulus();
  const std::uint64_t q = m.q(), qk = m.group_order(), a = chi.residue();
  const std::uint64_t nr = n % q;
  ckahan acc;
  // iterate over units as powers of the generator: u = g^j, chi(u) = e(aj/q_k)
  for (std::uint64_t j = 0; j < qk; ++j) {
    std::uint64_t u = m.power_of_generator(j);
    acc.add(m.unit_root(mul_mod(a, j, qk)) * m.additive_root(mul_mod(u, nr, q)));
  }
  return acc.value();
}

cplx root_number(const DirichletCharacter& chi) {
  return gauss_sum(chi, 1) / std::sqrt(static_cast<double>(chi.modulus().q()));
}

}  // namespace orbitlf
