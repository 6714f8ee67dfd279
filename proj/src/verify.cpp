#include "mzv/verify.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace mzv {

namespace {

constexpr int kGuardDigits = 15;

// 10^{-digits} at error precision.
Mpfr ten_to_minus(int digits) {
  Mpfr t(64);
  mpfr_set_ui(t.get(), 10, MPFR_RNDN);
  mpfr_pow_si(t.get(), t.get(), -digits, MPFR_RNDN);
  return t;
}

}  // namespace

std::string status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return "verified";
    case VerifyStatus::Refuted: return "refuted";
    case VerifyStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

VerifyStatus classify_residual(const BigReal& residual, int digits) {
  const Mpfr threshold = ten_to_minus(digits);
  Mpfr mag(64);
  mpfr_abs(mag.get(), residual.value.get(), MPFR_RNDU);
  if (mpfr_cmp(mag.get(), threshold.get()) < 0 && mpfr_cmp(residual.err.get(), threshold.get()) < 0)
    return VerifyStatus::Verified;
  Mpfr ten_err(64);
  mpfr_mul_ui(ten_err.get(), residual.err.get(), 10, MPFR_RNDU);
  if (mpfr_cmp(mag.get(), ten_err.get()) > 0) return VerifyStatus::Refuted;
  return VerifyStatus::Inconclusive;
}

BigReal zeta_ratio(const Identity& id, int digits, MzvEvaluator& ev) {
  if (id.weight < 2) throw std::invalid_argument("zeta(N) needs N >= 2");
  BigReal lhs = ev.eval(id.lhs, digits);
  BigReal z = ev.zeta(ZetaComposition{{id.weight}}, digits);
  return lhs / z;
}

VerificationReport verify(const Identity& id, int digits, MzvEvaluator& ev) {
  if (digits < 10) throw std::invalid_argument("verification needs at least 10 digits");
  const auto start = std::chrono::steady_clock::now();
  const int work = digits + kGuardDigits;

  VerificationReport rep;
  rep.identity = family_name(id.family) + " " + id.params.dump();
  rep.weight = id.weight;
  rep.digits = digits;

  if (id.rhs.kind == Rhs::Kind::UnknownZetaMultiple) {
    BigReal lhs = ev.eval(id.lhs, work);
    BigReal z = ev.zeta(ZetaComposition{{id.weight}}, work);
    rep.zeta_ratio = recognize_rational(lhs / z, mpz_class(1'000'000));
    rep.residual = rep.zeta_ratio ? lhs - scale(z, *rep.zeta_ratio) : lhs;
  } else {
    rep.residual = ev.eval(id.difference(), work);
  }

  rep.status = classify_residual(rep.residual, digits);
  if (rep.status != VerifyStatus::Verified && id.rhs.kind == Rhs::Kind::UnknownZetaMultiple && !rep.zeta_ratio)
    rep.status = VerifyStatus::Inconclusive;
  const double l = log10_abs(rep.residual);
  rep.digits_matched = l <= -work ? work : std::max(0, static_cast<int>(std::floor(-l)));
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace mzv
