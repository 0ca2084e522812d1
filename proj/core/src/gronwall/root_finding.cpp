#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "vvl/gronwall/numerics.hpp"

namespace vvl::numerics {

RootResult brent(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                 double f_tol, std::size_t max_iterations) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  RootResult out;
  if (fa == 0.0 || std::abs(fa) <= f_tol) return {a, fa, 0, true};
  if (fb == 0.0 || std::abs(fb) <= f_tol) return {b, fb, 0, true};
  if ((fa > 0.0) == (fb > 0.0)) {
    throw std::invalid_argument("brent: bracket does not straddle a root");
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * 1e-16 * std::abs(b) + 0.5 * x_tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || std::abs(fb) <= f_tol) {
      return {b, fb, iter, true};
    }
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  out.root = b;
  out.residual = fb;
  out.iterations = max_iterations;
  out.converged = false;
  return out;
}

}  // namespace vvl::numerics
