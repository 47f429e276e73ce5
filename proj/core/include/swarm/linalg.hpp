#pragma once

#include <array>

#include "swarm/system_matrices.hpp"

namespace swarm {

/// Solves C A + A^T C = -I for the symmetric C by stacking the equation
/// into a 10-unknown linear system over the upper triangle of C.
/// Throws numerical_error("undelayed system unstable") when the system is
/// singular or the solution is not positive definite (both of which happen
/// exactly when A is not Hurwitz).
Mat4 solve_lyapunov(const Mat4& a);

/// All four eigenvalues of a symmetric matrix by cyclic Jacobi rotation
/// sweeps, ascending order. Input must be symmetric to 1e-9 (absolute);
/// asymmetric input throws std::invalid_argument.
std::array<double, 4> jacobi_eigenvalues(const Mat4& m);

/// Largest eigenvalue of a symmetric 4x4 matrix (cyclic Jacobi).
double max_eigenvalue_symmetric(const Mat4& m);

/// Routh-Hurwitz test on the degree-4 characteristic polynomial of a
/// (generally nonsymmetric) matrix: true iff all eigenvalues satisfy
/// Re(lambda) < 0.
bool is_hurwitz(const Mat4& a);

/// Monic characteristic polynomial coefficients {c0, c1, c2, c3} of a 4x4
/// matrix, p(s) = s^4 + c3 s^3 + c2 s^2 + c1 s + c0, via the
/// Faddeev-LeVerrier trace recursion.
std::array<double, 4> characteristic_polynomial(const Mat4& a);

}  // namespace swarm
