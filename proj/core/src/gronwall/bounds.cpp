#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vvl/gronwall/gronwall.hpp"
#include "vvl/gronwall/numerics.hpp"

namespace vvl {

namespace {

void require_step4_domain(const ExtendedReal& z0, const GronwallParams& params, const char* where) {
  if (params.B() == 0.0) {
    throw std::invalid_argument(std::string(where) +
                                ": B = 0 makes the R** integral diverge; use unforced_dissipation_bound");
  }
  if (z0.is_finite() && !(z0.value() > r_star_star(params))) {
    throw std::invalid_argument(std::string(where) +
                                ": z0 <= R**; use the BELOW or CRITICAL case bound instead");
  }
}

// In rho = R** e^u, (rho - R**) / (-phi(rho)) d rho becomes
// K (e^u - 1) e^{(1-alpha) u} / (1 - e^{-beta u} / 2) du with K = R**^(2-alpha) / (A nu),
// since (R*/R**)^beta = 1/2.
struct Step4Integrand {
  explicit Step4Integrand(const GronwallParams& params)
      : alpha(params.alpha()),
        beta(params.alpha() - 0.5),
        rss(r_star_star(params)),
        K(std::pow(rss, 2.0 - alpha) / (params.A() * params.nu())) {}

  double operator()(double u) const {
    if (u <= 0.0) return 0.0;
    return K * std::expm1(u) * std::exp((1.0 - alpha) * u) / (1.0 - 0.5 * std::exp(-beta * u));
  }

  // Integral over [R** w, inf) of (rho - R**)/(-phi), summed term by term.
  double tail(double w) const {
    double sum = 0.0;
    double weight = 1.0;
    for (int j = 0; j < 200; ++j) {
      const double e = j * beta;
      const double term =
          weight * (std::pow(w, 2.0 - alpha - e) / (alpha - 2.0 + e) - std::pow(w, 1.0 - alpha - e) / (alpha - 1.0 + e));
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
      weight *= 0.5;
    }
    return K * sum;
  }

  double alpha, beta, rss, K;
};

}  // namespace

double capital_phi_integral(const ExtendedReal& z0, const GronwallParams& params) {
  require_step4_domain(z0, params, "capital_phi_integral");
  const Step4Integrand f(params);
  if (z0.is_infinite()) {
    constexpr double kSplit = 4.0;
    const auto q = numerics::integrate(f, 0.0, kSplit, 1e-12);
    return q.value + f.tail(std::exp(kSplit));
  }
  const double z = z0.value();
  const auto q = numerics::integrate(f, 0.0, std::log(z / f.rss), 1e-12);
  return q.value + (z - f.rss) * capital_phi(z, params);
}

double dissipation_bound_step4(double t, const ExtendedReal& z0, const GronwallParams& params) {
  if (!(t > 0.0)) throw std::invalid_argument("dissipation_bound_step4: t must be positive");
  require_step4_domain(z0, params, "dissipation_bound_step4");
  const double rss = r_star_star(params);
  return params.nu() * (capital_phi_integral(z0, params) + t * rss + rss * capital_phi(z0, params));
}

double step4_tail_majorant(const GronwallParams& params) {
  if (params.B() == 0.0) throw std::invalid_argument("step4_tail_majorant: requires B > 0");
  const double a = params.alpha();
  return 2.0 / (params.A() * (a - 1.0) * (a - 2.0)) * std::pow(r_star_star(params), 2.0 - a);
}

double unforced_dissipation_bound(double t, const ExtendedReal& z0, const GronwallParams& params) {
  if (!(t >= 0.0)) throw std::invalid_argument("unforced_dissipation_bound: t must be non-negative");
  const double a = params.alpha();
  const double kappa = params.A() * params.nu() * (a - 1.0);
  // m(s) = (kappa (s + Phi0))^(-1/(a-1)) with Phi0 = z0^(1-a) / kappa.
  const double phi0 = z0.is_infinite() ? 0.0 : std::pow(z0.value(), 1.0 - a) / kappa;
  const double e = (a - 2.0) / (a - 1.0);
  const double integral =
      std::pow(kappa, -1.0 / (a - 1.0)) / e * (std::pow(t + phi0, e) - std::pow(phi0, e));
  return params.nu() * integral;
}

std::vector<double> case_ratios(std::span<const LadderPoint> ladder, double A, double B, double alpha) {
  std::vector<double> out;
  out.reserve(ladder.size());
  for (const auto& point : ladder) {
    const double rs = r_star(GronwallParams(A, B, alpha, point.nu));
    if (point.z0.is_infinite() || rs == 0.0) {
      out.push_back(INFINITY);
    } else {
      out.push_back(point.z0.value() / rs);
    }
  }
  return out;
}

CaseLabel classify_case(std::span<const LadderPoint> ladder, double A, double B, double alpha, double margin) {
  if (ladder.size() < 3) throw std::invalid_argument("classify_case: ladder needs at least 3 points");
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (!(ladder[i].nu < ladder[i - 1].nu)) {
      throw std::invalid_argument("classify_case: nu must be strictly decreasing");
    }
  }
  if (!(margin >= 0.0 && margin < 1.0)) throw std::invalid_argument("classify_case: margin must lie in [0, 1)");
  const auto ratios = case_ratios(ladder, A, B, alpha);
  const std::size_t window = (ratios.size() + 2) / 3;
  const double tail_max = *std::max_element(ratios.end() - static_cast<std::ptrdiff_t>(window), ratios.end());
  if (tail_max < 1.0 - margin) return CaseLabel::Below;
  if (tail_max <= 1.0 + margin) return CaseLabel::Critical;
  return CaseLabel::Above;
}

double case_bounds(CaseLabel label, double t, const GronwallParams& params, const ExtendedReal& z0) {
  if (!(t >= 0.0)) throw std::invalid_argument("case_bounds: t must be non-negative");
  const double rs = r_star(params);
  switch (label) {
    case CaseLabel::Below:
      return params.nu() * t * rs;
    case CaseLabel::Critical:
      return 2.0 * params.nu() * t * rs;
    case CaseLabel::Above:
      if (params.B() == 0.0) return unforced_dissipation_bound(t, z0, params);
      if (t == 0.0) return 0.0;
      if (z0.is_infinite() || z0.value() > r_star_star(params)) return dissipation_bound_step4(t, z0, params);
      return 2.0 * params.nu() * t * rs;
  }
  throw std::invalid_argument("case_bounds: unknown case label");
}

GronwallConstants estimate_params(double p, double omega0_lp_sup, double g_l1lp_sup, double g_linfl2_sup,
                                  double c_gn) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("estimate_params: p must lie in (1, 2)");
  if (!(c_gn > 0.0)) throw std::invalid_argument("estimate_params: c_gn must be positive");
  if (!(omega0_lp_sup >= 0.0) || !(g_l1lp_sup >= 0.0) || !(g_linfl2_sup >= 0.0)) {
    throw std::invalid_argument("estimate_params: norms must be non-negative");
  }
  const double data = omega0_lp_sup + g_l1lp_sup;
  if (!(data > 0.0) || !std::isfinite(data)) {
    throw std::invalid_argument("estimate_params: omega0_lp_sup + g_l1lp_sup must be positive and finite");
  }
  const double alpha = 2.0 / (2.0 - p);
  const double A = 2.0 * c_gn * std::pow(data, -2.0 * p / (2.0 - p));
  return {A, 2.0 * g_linfl2_sup, alpha};
}

}  // namespace vvl
