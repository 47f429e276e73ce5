#pragma once

#include <cmath>
#include <functional>

#include "swarm/error.hpp"

namespace swarm {

/// Recursive adaptive Simpson on [a, b]. The error target is
/// rel_tol * |integral| (with an absolute floor for integrals near zero);
/// each bisection halves the local budget, so leaf errors sum to the target.
/// Throws numerical_error if the depth limit is hit before convergence.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double rel_tol, double abs_floor = 1e-14) {
  struct Impl {
    const std::function<double(double)>& f;

    double recurse(double a, double fa, double m, double fm, double b, double fb,
                   double coarse, double tol, int depth) const {
      const double lm = 0.5 * (a + m);
      const double rm = 0.5 * (m + b);
      const double flm = f(lm);
      const double frm = f(rm);
      const double h = b - a;
      const double left = h / 12.0 * (fa + 4.0 * flm + fm);
      const double right = h / 12.0 * (fm + 4.0 * frm + fb);
      const double fine = left + right;
      const double err = (fine - coarse) / 15.0;
      if (std::abs(err) <= tol) {
        return fine + err;
      }
      if (depth >= 60) {
        throw numerical_error("adaptive_simpson: depth limit reached");
      }
      return recurse(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
             recurse(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
    }
  };

  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double coarse = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = std::max(rel_tol * std::abs(coarse), abs_floor);
  Impl impl{f};
  return impl.recurse(a, fa, m, fm, b, fb, coarse, tol, 0);
}

}  // namespace swarm
