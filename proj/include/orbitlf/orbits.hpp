#pragma once

#include <cstdint>
#include <vector>

#include "orbitlf/character.hpp"

namespace orbitlf {

enum class OrbitKind { full, thin };

// Galois orbit of primitive characters mod p^k.
//
// FULL(c): all primitive chi_a with gcd(a, p-1) = c, i.e. the orbit of any
// one of them under the full Galois action a -> t*a, gcd(t, q_k) = 1.
//
// THIN(kappa): orbit under the subgroup {t : t = 1 mod phi(p^(k-kappa))}.
// Thin orbits partition a full orbit; each carries the base (smallest
// residue) that generated it.
class GaloisOrbit {
public:
  static GaloisOrbit full_orbit(ModulusPtr m, std::uint64_t c);
  static std::vector<GaloisOrbit> thin_orbits(ModulusPtr m, int kappa, const GaloisOrbit& parent);

  OrbitKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return c_; }
  int kappa() const { return kappa_; }  // -1 for full orbits
  std::uint64_t base_residue() const { return base_; }
  const PrimePowerModulus& modulus() const { return *mod_; }
  ModulusPtr modulus_ptr() const { return mod_; }

  std::size_t size() const { return members_.size(); }
  const std::vector<std::uint64_t>& members() const { return members_; }  // ascending residues
  DirichletCharacter character(std::size_t i) const {
    return DirichletCharacter(mod_, members_[i]);
  }

  // chi(-1) parity, constant across the orbit (all Galois multipliers t are
  // odd because q_k is even); asserted at construction.
  int parity() const { return parity_; }

private:
  GaloisOrbit(ModulusPtr m, OrbitKind kind, std::uint64_t c, int kappa,
              std::vector<std::uint64_t> members);

  ModulusPtr mod_;
  OrbitKind kind_;
  std::uint64_t c_;
  int kappa_;
  std::uint64_t base_;
  std::vector<std::uint64_t> members_;
  int parity_;
};

struct OrbitAverage {
  cplx value;       // authoritative: closed form for full orbits, member sum for thin
  cplx brute;       // direct member sum, always computed
  bool has_closed_form = false;
  long long closed_num = 0;  // closed form as the exact rational mu(d)/phi(d)
  std::uint64_t closed_den = 1;
  std::uint64_t d = 1;  // d = ord(n^c mod q) = (q_k/c) / gcd(iota(n), q_k/c)
};

// Average of chi(n) over the orbit; requires gcd(n, p) = 1.
OrbitAverage orbit_average(const GaloisOrbit& orbit, std::uint64_t n);

struct EpsilonAverage {
  cplx value;  // exact 0.0 when the vanishing criterion applies
  cplx route_direct;
  cplx route_wsum;
  bool vanishes = false;
  std::uint64_t surviving_terms = 0;  // nonzero w-terms in route (b)
  double term_count_bound = 0.0;      // surviving_terms * p^(k - h/2) / q, provable termwise
  double paper_bound = 0.0;           // magnitude shape with unit constant, report-only for thin
};

// Average of eps_{chi eta1} * eps_{conj(chi eta2)} * chi(n) over the orbit,
// evaluated two independent ways:
//   (a) direct product of root numbers per member,
//   (b) (1/q) sum over units w of eta1(w) E_O[chi(nw)] c_eta(w+1)
// with eta = eta1 * conj(eta2). The two routes are reconciled to 1e-8 for
// every unit n at construction.
class EpsilonAverageTable {
public:
  EpsilonAverageTable(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                      const DirichletCharacter& eta2);

  EpsilonAverage at(std::uint64_t n) const;

  // Fast path for the moment sums: value (with exact zeros) indexed by n mod q.
  const cplx& value(std::uint64_t n_mod_q) const { return value_[n_mod_q]; }

  int h() const { return h_; }
  double max_route_disagreement() const { return max_disagreement_; }

private:
  ModulusPtr mod_;
  int h_;
  int kappa_;       // -1 for full
  int vanish_exp_;  // vanishing criterion modulus exponent: n^(p-1) = 1 mod p^vanish_exp_
  double paper_bound_;
  std::vector<cplx> value_;
  std::vector<cplx> route_a_;
  std::vector<cplx> route_b_;
  std::vector<std::uint32_t> surviving_;
  std::vector<bool> vanishes_;
  double term_norm_;  // p^(k - h/2) / q
  double max_disagreement_;
};

EpsilonAverage epsilon_weighted_orbit_average(const GaloisOrbit& orbit,
                                              const DirichletCharacter& eta1,
                                              const DirichletCharacter& eta2, std::uint64_t n);

// Shared validation for the eta pair; returns h = height(eta1 * conj(eta2)).
int validate_eta_pair(const GaloisOrbit& orbit, const DirichletCharacter& eta1,
                      const DirichletCharacter& eta2);

}  // namespace orbitlf
