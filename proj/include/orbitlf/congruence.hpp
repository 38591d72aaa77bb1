#pragma once

#include <cstdint>
#include <vector>

#include "orbitlf/numeric.hpp"

namespace orbitlf {

// Dyadic box [A, 2A) x [B, 2B) for pairs (a, b) coprime to p, counted mod p^alpha.
// Real anchors are rounded up to integers (flagged in the report).
struct DyadicBox {
  double A = 1.0;
  double B = 1.0;
  std::uint64_t p = 3;
  int alpha = 1;
};

struct CongruenceCountReport {
  std::uint64_t p = 0;
  int alpha = 0;
  std::uint64_t A = 0;  // integer anchors actually used
  std::uint64_t B = 0;
  bool anchors_rounded = false;

  // D0: a^(p-1) = b^(p-1) mod p^alpha with a != b  (equivalently a = zeta*b
  // for some (p-1)-st root of unity zeta mod p^alpha)
  // D1: the zeta = +-1 part; D2: the rest. D0 = D1 + D2 by construction.
  std::uint64_t d0_raw = 0;
  std::uint64_t d1_raw = 0;
  std::uint64_t d2_raw = 0;
  double d0_normalized = 0.0;  // raw / sqrt(A*B)
  double d1_normalized = 0.0;
  double d2_normalized = 0.0;

  std::vector<std::uint64_t> per_zeta;  // indexed by j = 1..p-1 (slot 0 unused); a != b applied
  double elapsed_ms = 0.0;
};

// Counts by walking arithmetic progressions a = zeta_j * b mod p^alpha per
// Teichmuller class, never evaluating (p-1)-st powers of box elements.
CongruenceCountReport count_congruence(const DyadicBox& box);

struct NaiveBoundCheck {
  bool ok = false;
  double bound = 0.0;   // (p-1) * min(A,B) * (max(A,B)/p^alpha + 1)
  double margin = 0.0;  // bound - d0_raw
  CongruenceCountReport report;
};
NaiveBoundCheck naive_bound_check(const DyadicBox& box);

struct RothRidoutProbe {
  std::uint64_t p = 0;
  int alpha = 0;
  double delta = 0.0;
  double size_limit = 0.0;  // boxes require 2A, 2B < p^(alpha(1/2-delta))
  std::uint64_t boxes_checked = 0;
  std::uint64_t boxes_skipped = 0;  // dyadic anchors at or past the size limit
  std::uint64_t d0_total = 0;
  std::uint64_t d1_total = 0;
  std::uint64_t d2_total = 0;
  std::uint64_t max_box_d0 = 0;
};

// Diagnostic sweep over power-of-two anchors inside the size hypothesis.
// Reports violation counts; never asserts (the underlying statement is
// ineffective, so thresholds are observational only).
RothRidoutProbe roth_ridout_probe(std::uint64_t p, int alpha, double delta);

struct PrimePowerLemmaCheck {
  bool holds = false;
  std::uint64_t solutions = 0;   // of m^p = 1 mod p^alpha
  std::vector<std::uint64_t> witnesses;  // the solutions, ascending
};

// Exhaustive check that m^p = 1 mod p^alpha forces m = 1 mod p^(alpha-1).
PrimePowerLemmaCheck lemma_prime_power_check(std::uint64_t p, int alpha);

}  // namespace orbitlf
