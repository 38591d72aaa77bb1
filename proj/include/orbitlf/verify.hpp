#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbitlf::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

// Partition invariants only: full orbits cover the primitive characters once
// with the predicted sizes, thin orbits partition their parents. Cheap enough
// for cmd_orbits to run on every call.
std::vector<CheckResult> partition_suite(std::uint64_t p, int k);

// Exact-lemma suite for one modulus: the partition suite plus closed-form vs
// brute orbit averages, Gauss-sum support and magnitude, epsilon-weighted
// two-route agreement with its vanishing criterion, and Teichmuller lifts.
std::vector<CheckResult> exact_lemma_suite(std::uint64_t p, int k, unsigned threads = 0);

// m^p = 1 mod p^alpha forces m = 1 mod p^(alpha-1), for alpha = 1..alpha_max.
CheckResult prime_power_lemma(std::uint64_t p, int alpha_max);

// D0 = D1 + D2 plus Teichmuller-walk vs brute-force counts and the naive
// bound, on deterministic pseudorandom boxes with A*B <= max_product.
std::vector<CheckResult> congruence_box_suite(int boxes, std::uint64_t seed,
                                              double max_product = 1e6);

// AFE vs the Hurwitz oracle over characters of one full orbit (max_chars = 0
// means every primitive character mod q).
CheckResult afe_oracle_check(std::uint64_t p, int k, int h1, int h2, double X, double tol,
                             std::size_t max_chars, double multiplier, unsigned threads = 0);

// Orbit-averaged AFE vs direct moments, including the deliberate S-minus
// sign-flip run that must fail (shows the comparison has teeth).
std::vector<CheckResult> moment_afe_suite(std::uint64_t p, int k, unsigned threads = 0);

// Mollifier two-route agreement for every primitive character, the truncated
// exponential grid inequality, and the exhaustive trichotomy classification.
std::vector<CheckResult> mollifier_suite(std::uint64_t p, int k);

// Cauchy-Schwarz chain for the mollified nonvanishing lower bound.
CheckResult holder_chain_check(std::uint64_t p, int k, unsigned threads = 0);

// Everything cmd_verify runs for one ladder entry.
std::vector<CheckResult> ladder_entry_suite(std::uint64_t p, int k, std::uint64_t seed,
                                            unsigned threads = 0);

// Characters eta_i of height h_i mod p^k as plain residues p^(k-h).
std::uint64_t eta_residue_for_height(std::uint64_t p, int k, int h);

}  // namespace orbitlf::verify
