#include "vvl/gronwall/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vvl/gronwall/extended_real.hpp"

namespace vvl {

double ExtendedReal::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

GronwallParams::GronwallParams(double A, double B, double alpha, double nu)
    : A_(A), B_(B), alpha_(alpha), nu_(nu) {
  if (!(A > 0.0) || !std::isfinite(A)) throw std::invalid_argument("GronwallParams: A must be positive");
  if (!(B >= 0.0) || !std::isfinite(B)) throw std::invalid_argument("GronwallParams: B must be non-negative");
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw std::invalid_argument("GronwallParams: alpha must exceed 2");
  if (!(nu > 0.0) || !std::isfinite(nu)) throw std::invalid_argument("GronwallParams: nu must be positive");
}

GronwallParams GronwallParams::from_p(double p, double A, double B, double nu) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("GronwallParams: p must lie in (1, 2)");
  return {A, B, 2.0 / (2.0 - p), nu};
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Below: return "BELOW";
    case CaseLabel::Critical: return "CRITICAL";
    case CaseLabel::Above: return "ABOVE";
  }
  return "?";
}

CaseLabel parse_case_label(const std::string& text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "BELOW") return CaseLabel::Below;
  if (upper == "CRITICAL") return CaseLabel::Critical;
  if (upper == "ABOVE") return CaseLabel::Above;
  throw std::invalid_argument("unknown case label '" + text + "'");
}

double phi(double r, const GronwallParams& params) {
  if (r < 0.0) throw std::invalid_argument("phi: r must be non-negative");
  return -params.A() * params.nu() * std::pow(r, params.alpha()) + params.B() * std::sqrt(r);
}

double phi_prime(double r, const GronwallParams& params) {
  if (!(r > 0.0)) throw std::invalid_argument("phi_prime: r must be positive");
  return -params.alpha() * params.A() * params.nu() * std::pow(r, params.alpha() - 1.0) +
         0.5 * params.B() / std::sqrt(r);
}

double r_star(const GronwallParams& params) {
  if (params.B() == 0.0) return 0.0;
  return std::pow(params.B() / (params.A() * params.nu()), 2.0 / (2.0 * params.alpha() - 1.0));
}

double r_star_star(const GronwallParams& params) {
  if (params.B() == 0.0) return 0.0;
  return std::pow(2.0 * params.B() / (params.A() * params.nu()), 2.0 / (2.0 * params.alpha() - 1.0));
}

double phi_prime_root(const GronwallParams& params) {
  if (params.B() == 0.0) return 0.0;
  return std::pow(params.B() / (2.0 * params.alpha() * params.A() * params.nu()),
                  2.0 / (2.0 * params.alpha() - 1.0));
}

}  // namespace vvl
