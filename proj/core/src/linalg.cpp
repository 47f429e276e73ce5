#include "swarm/linalg.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarm/error.hpp"

namespace swarm {

namespace {

void require_symmetric(const Mat4& m) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-9) {
        throw std::invalid_argument("matrix is not symmetric");
      }
    }
  }
}

}  // namespace

Mat4 solve_lyapunov(const Mat4& a) {
  // Unknowns: upper triangle of C in row-major order,
  //   x = [c00 c01 c02 c03 c11 c12 c13 c22 c23 c33].
  // One equation per (p,q), p <= q, of C A + A^T C = -I:
  //   sum_r C[p][r] A[r][q] + sum_r A[r][p] C[r][q] = -delta_pq.
  static constexpr int kIdx[4][4] = {
      {0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};

  Eigen::Matrix<double, 10, 10> lhs = Eigen::Matrix<double, 10, 10>::Zero();
  Eigen::Matrix<double, 10, 1> rhs = Eigen::Matrix<double, 10, 1>::Zero();

  int row = 0;
  for (int p = 0; p < 4; ++p) {
    for (int q = p; q < 4; ++q, ++row) {
      for (int r = 0; r < 4; ++r) {
        lhs(row, kIdx[p][r]) += a(r, q);
        lhs(row, kIdx[r][q]) += a(r, p);
      }
      rhs(row) = p == q ? -1.0 : 0.0;
    }
  }

  Eigen::FullPivLU<Eigen::Matrix<double, 10, 10>> lu(lhs);
  if (!lu.isInvertible()) {
    throw numerical_error("undelayed system unstable: Lyapunov system singular");
  }
  const Eigen::Matrix<double, 10, 1> x = lu.solve(rhs);

  Mat4 c;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      c(p, q) = x(kIdx[p][q]);
    }
  }

  const auto eigs = jacobi_eigenvalues(c);
  if (eigs[0] <= 0.0) {
    throw numerical_error("undelayed system unstable: Lyapunov solution not positive definite");
  }
  return c;
}

std::array<double, 4> jacobi_eigenvalues(const Mat4& m) {
  require_symmetric(m);
  Mat4 a = 0.5 * (m + m.transpose());

  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        off += a(p, q) * a(p, q);
      }
    }
    if (std::sqrt(off) <= 1e-14 * scale) {
      break;
    }
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a(p, q) == 0.0) {
          continue;
        }
        // Classic two-sided Jacobi rotation zeroing a(p,q).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int r = 0; r < 4; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < 4; ++r) {
          const double apr = a(p, r);
          const double aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
      }
    }
  }

  std::array<double, 4> eigs{a(0, 0), a(1, 1), a(2, 2), a(3, 3)};
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double max_eigenvalue_symmetric(const Mat4& m) { return jacobi_eigenvalues(m)[3]; }

std::array<double, 4> characteristic_polynomial(const Mat4& a) {
  // Faddeev-LeVerrier: M1 = A, c3 = -tr(M1); M_{k+1} = A (M_k + c_k I).
  const double t1 = a.trace();
  const Mat4 a2 = a * (a - t1 * Mat4::Identity());
  const double c2 = -0.5 * a2.trace();
  const Mat4 a3 = a * (a2 + c2 * Mat4::Identity());
  const double c1 = -a3.trace() / 3.0;
  const Mat4 a4 = a * (a3 + c1 * Mat4::Identity());
  const double c0 = -a4.trace() / 4.0;
  return {c0, c1, c2, -t1};
}

bool is_hurwitz(const Mat4& a) {
  if (!a.allFinite()) {
    return false;
  }
  // p(s) = s^4 + a3 s^3 + a2 s^2 + a1 s + a0. Routh conditions for degree 4:
  //   a3 > 0, a0 > 0, b1 = a3 a2 - a1 > 0, b1 a1 - a3^2 a0 > 0.
  const auto c = characteristic_polynomial(a);
  const double a0 = c[0], a1 = c[1], a2 = c[2], a3 = c[3];
  if (a3 <= 0.0 || a0 <= 0.0) {
    return false;
  }
  const double b1 = a3 * a2 - a1;
  if (b1 <= 0.0) {
    return false;
  }
  return b1 * a1 - a3 * a3 * a0 > 0.0;
}

}  // namespace swarm
