#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

// Point-value algebra of the first-order system d_t u + sum_j A_j(u) d_j u.
// Unknown ordering is (rho, v_1, ..., v_d); the artificial-compressibility
// system uses (rho, P~, v_1, ..., v_d). Matrices are written for general d;
// the length of `v` and `xi` fixes d.

namespace cif {

/// A_j of the conservative density equation: first row (v_j, rho e_j^T),
/// first column below the diagonal f e_j, v_j on the diagonal.
Eigen::MatrixXd flux_matrix(std::size_t j, double rho, std::span<const double> v, double f);

/// A_j of the transport-form density equation: as flux_matrix but with the
/// rho e_j^T entries of the first row removed.
Eigen::MatrixXd transport_flux_matrix(std::size_t j, double rho, std::span<const double> v,
                                      double f);

/// A(xi, u) = sum_j A_j(u) xi_j built from flux_matrix.
/// Throws PreconditionError when |xi| = 0.
Eigen::MatrixXd assemble_symbol(double rho, std::span<const double> v, double f,
                                std::span<const double> xi);

/// {v.xi (d-1 times), v.xi -/+ sqrt(f rho)|xi|}, sorted ascending.
/// Throws HyperbolicityLoss when f * rho < 0.
std::vector<double> eigenvalues_closed_form(double rho, std::span<const double> v, double f,
                                            std::span<const double> xi);

/// General (non-symmetric) eigensolver, sorted by real part then imaginary part.
std::vector<std::complex<double>> eigenvalues_numerical(const Eigen::MatrixXd& a);

/// Dimension of ker(A - lambda I), by counting singular values below
/// tol * max(1, ||A||).
std::size_t geometric_multiplicity(const Eigen::MatrixXd& a, double lambda, double tol = 1e-9);

struct Symmetrizer {
  /// Diagonal entries (f / rho, 1, ..., 1).
  Eigen::VectorXd diagonal;
  bool positive_definite = false;

  Eigen::MatrixXd matrix() const { return diagonal.asDiagonal(); }
};

/// Friedrichs symmetrizer diag(f/rho, 1, ..., 1) of size `size`
/// (d + 1 for the incompressible forms, d + 2 for artificial compressibility).
/// Throws PreconditionError for rho <= 0. A non-positive f is returned but
/// flagged through positive_definite = false.
Symmetrizer symmetrizer(double rho, double f, std::size_t size);

/// Regular part A~_j of the artificial-compressibility flux matrix.
Eigen::MatrixXd acoustic_regular_matrix(std::size_t j, double rho, std::span<const double> v,
                                        double f);
/// Constant singular part A0_j (coefficient of 1/eps): couples P~ and v_j.
Eigen::MatrixXd acoustic_singular_matrix(std::size_t j, std::size_t d);
/// A~_j + A0_j / eps.
Eigen::MatrixXd acoustic_flux_matrix(std::size_t j, double rho, std::span<const double> v,
                                     double f, double eps);

/// max |M - M^T|.
double asymmetry(const Eigen::MatrixXd& m);

}  // namespace cif
