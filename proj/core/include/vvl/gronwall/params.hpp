#pragma once

#include <string>

namespace vvl {

/// Coefficients of phi(r) = -A nu r^alpha + B sqrt(r), the right-hand side
/// of the enstrophy differential inequality z' <= phi(z).
class GronwallParams {
 public:
  /// Requires A > 0, B >= 0, alpha > 2, nu > 0; throws std::invalid_argument.
  GronwallParams(double A, double B, double alpha, double nu);

  /// alpha = 2 / (2 - p); requires p in (1, 2).
  static GronwallParams from_p(double p, double A, double B, double nu);

  double A() const { return A_; }
  double B() const { return B_; }
  double alpha() const { return alpha_; }
  double nu() const { return nu_; }
  /// Integrability exponent p = 2 - 2/alpha.
  double p() const { return 2.0 - 2.0 / alpha_; }

  GronwallParams with_nu(double nu) const { return {A_, B_, alpha_, nu}; }

 private:
  double A_, B_, alpha_, nu_;
};

/// Position of limsup z(0)/R* along a viscosity ladder.
enum class CaseLabel { Below, Critical, Above };

std::string to_string(CaseLabel label);
/// Accepts BELOW / CRITICAL / ABOVE in any case; throws on anything else.
CaseLabel parse_case_label(const std::string& text);

/// phi(r) for r >= 0; negative r throws.
double phi(double r, const GronwallParams& params);
double phi_prime(double r, const GronwallParams& params);

/// Positive root (B/(A nu))^(2/(2 alpha - 1)); 0 when B = 0.
double r_star(const GronwallParams& params);

/// (2B/(A nu))^(2/(2 alpha - 1)); beyond it phi(r) <= -A nu r^alpha / 2.
double r_star_star(const GronwallParams& params);

/// The unique zero of phi' on r > 0, (B/(2 alpha A nu))^(2/(2 alpha - 1)).
double phi_prime_root(const GronwallParams& params);

}  // namespace vvl
