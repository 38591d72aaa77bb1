#pragma once

#include <cstdint>

#include "orbitlf/modulus.hpp"

namespace orbitlf {

// Dirichlet character mod p^k, represented by its residue a in [0, q_k):
// chi_a(n) = e(a * iota(n) / q_k) on units, 0 elsewhere.
class DirichletCharacter {
public:
  DirichletCharacter(ModulusPtr m, std::uint64_t residue);

  const PrimePowerModulus& modulus() const { return *mod_; }
  ModulusPtr modulus_ptr() const { return mod_; }
  std::uint64_t residue() const { return a_; }

  // Conductor exponent h: conductor = p^h. Determined by p^(k-h) || a
  // (h = k iff p does not divide a; the principal character a = 0 has h = 0).
  int height() const { return height_; }
  bool primitive() const { return height_ == mod_->k(); }
  bool principal() const { return a_ == 0; }

  // gcd(a, p-1): selector of the full Galois orbit containing chi_a when
  // chi_a is primitive.
  std::uint64_t characteristic() const;

  // kappa in {0,1} with chi(-1) = (-1)^kappa; equals a mod 2 since
  // iota(-1) = q_k / 2.
  int parity() const { return static_cast<int>(a_ % 2); }

  UnitRootValue eval(std::uint64_t n) const;
  cplx operator()(std::uint64_t n) const;

  DirichletCharacter conjugate() const;
  DirichletCharacter times(const DirichletCharacter& other) const;

  bool operator==(const DirichletCharacter& other) const {
    return mod_->q() == other.mod_->q() && a_ == other.a_;
  }

private:
  ModulusPtr mod_;
  std::uint64_t a_;
  int height_;
};

// Spec-facing wrappers.
UnitRootValue char_eval(const DirichletCharacter& chi, std::uint64_t n);

// Full Gauss sum c_chi(n) = sum over units u mod q of chi(u) e(un/q).
cplx gauss_sum(const DirichletCharacter& chi, std::uint64_t n);

// Root number eps_chi = c_chi(1) / sqrt(q); unimodular for primitive chi.
cplx root_number(const DirichletCharacter& chi);

}  // namespace orbitlf
