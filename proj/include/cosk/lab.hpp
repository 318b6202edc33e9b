#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosk/models.hpp"
#include "cosk/spectral.hpp"

namespace cosk {

struct CheckRecord {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double residual = 0;  // equality: |lhs - rhs|; bound: lhs - rhs
  double tol = 0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  int m = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  CheckRecord& add_eq(const std::string& name, double lhs, double rhs,
                      double tol);
  CheckRecord& add_leq(const std::string& name, double lhs, double rhs,
                       double tol);
  CheckRecord& add_flag(const std::string& name, bool pass);
};

// Each chain evaluates, on the given unitary frame, the diagonal-sum closed
// forms, the weighted-partial-sum bound, and the exact average identity whose
// two sides it reports.  Algebra only; no positivity hypothesis is assumed.
VerificationReport identity_chain_flat(const KahlerOperator& op,
                                       const UnitaryFrame& frame);
VerificationReport identity_chain_ob(const KahlerOperator& op,
                                     const UnitaryFrame& frame);  // m >= 2
VerificationReport identity_chain_h(const KahlerOperator& op,
                                    const UnitaryFrame& frame);  // m >= 2
// Split chains: V0 = span{f_0, J f_0}, V1 the rest; complex dimension >= 2.
VerificationReport identity_chain_ric_perp(const KahlerOperator& op,
                                           const UnitaryFrame& frame);
VerificationReport identity_chain_mixed(const KahlerOperator& op,
                                        const UnitaryFrame& frame);

// Numeric hypothesis -> conclusion checks along shifted families
// R + t * const_hsc(m, 4), t on a 64-point geometric grid in [1e-3, 1e3];
// the smallest t whose status at the part's constant is nonnegative is used.
//   part 1: constant at 3(m^2-1)/2; conclusion: constant HSC and S >= 0
//           (generic seeds exercise the contrapositive instead).
//   part 2: alpha_m; conclusion: sampled HSC and orth bisectional >= -tol.
//   part 3: beta_m;  conclusion: sampled Ric-perp >= -tol.
//   part 4: gamma_m; conclusion: sampled 2 Ric - HSC >= -tol.
VerificationReport implication_suite(int m, int part, int trials, int samples,
                                     std::uint64_t seed);

// Below the borderline constant 3(m^2-1)/2 no operator is alpha-positive or
// alpha-negative; constant-HSC multiples stay non-strict and generic
// operators are indefinite on the whole grid.
VerificationReport corollary_suite(int m, int trials, std::uint64_t seed);

// All five chains over random draws and random frames at complex dimension m.
VerificationReport identity_suite(int m, int trials, std::uint64_t seed);

// Frozen model facts at complex dimension m: spectrum, threshold, scalar
// curvature, and the trace identity; m = 2 adds the product models with a
// sphere or line factor, m = 3 adds the scaled-product scan minimum (the
// attaining ratio is part of the check name).
VerificationReport model_suite(int m);

}  // namespace cosk
