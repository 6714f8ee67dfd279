#pragma once

#include <optional>
#include <string>

#include "mzv/identities.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

enum class VerifyStatus { Verified, Refuted, Inconclusive };

std::string status_name(VerifyStatus s);

struct VerificationReport {
  std::string identity;  // family name and parameters
  int weight = 0;
  int digits = 0;
  BigReal residual;
  int digits_matched = 0;
  VerifyStatus status = VerifyStatus::Inconclusive;
  double elapsed_seconds = 0;
  // Recognised rational q with lhs = q zeta(N), for identities whose
  // right-hand side is an unknown rational multiple of zeta(N).
  std::optional<Rational> zeta_ratio;
};

// Classify a residual at the target precision.
VerifyStatus classify_residual(const BigReal& residual, int digits);

VerificationReport verify(const Identity& id, int digits = 50, MzvEvaluator& ev = MzvEvaluator::shared());

// lhs / zeta(N) for identities with an unknown rational right-hand side.
BigReal zeta_ratio(const Identity& id, int digits, MzvEvaluator& ev = MzvEvaluator::shared());

}  // namespace mzv
