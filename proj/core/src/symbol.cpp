#include "cif/symbol.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "cif/errors.hpp"

namespace cif {
namespace {

void require_axis(std::size_t j, std::size_t d) {
  if (j >= d) throw PreconditionError(fmt::format("flux matrix: axis {} out of range d={}", j, d));
}

}  // namespace

Eigen::MatrixXd flux_matrix(std::size_t j, double rho, std::span<const double> v, double f) {
  const std::size_t d = v.size();
  require_axis(j, d);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d + 1, d + 1) * v[j];
  a(0, j + 1) = rho;
  a(j + 1, 0) = f;
  return a;
}

Eigen::MatrixXd transport_flux_matrix(std::size_t j, double rho, std::span<const double> v,
                                      double f) {
  Eigen::MatrixXd a = flux_matrix(j, rho, v, f);
  a(0, j + 1) = 0.0;
  return a;
}

Eigen::MatrixXd assemble_symbol(double rho, std::span<const double> v, double f,
                                std::span<const double> xi) {
  if (xi.size() != v.size()) throw DimensionMismatch("assemble_symbol: |xi| and |v| differ");
  double xi2 = 0.0;
  for (double x : xi) xi2 += x * x;
  if (xi2 == 0.0) throw PreconditionError("assemble_symbol: xi must be nonzero");
  const std::size_t d = v.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (std::size_t j = 0; j < d; ++j) a += flux_matrix(j, rho, v, f) * xi[j];
  return a;
}

std::vector<double> eigenvalues_closed_form(double rho, std::span<const double> v, double f,
                                            std::span<const double> xi) {
  if (xi.size() != v.size()) throw DimensionMismatch("eigenvalues: |xi| and |v| differ");
  if (f * rho < 0.0) {
    throw HyperbolicityLoss(
        fmt::format("f * rho = {:.6g} < 0: symbol has a complex spectrum", f * rho));
  }
  const std::size_t d = v.size();
  double vxi = 0.0;
  double xi2 = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    vxi += v[j] * xi[j];
    xi2 += xi[j] * xi[j];
  }
  const double c = std::sqrt(f * rho) * std::sqrt(xi2);
  std::vector<double> out(d - 1, vxi);
  out.push_back(vxi - c);
  out.push_back(vxi + c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::complex<double>> eigenvalues_numerical(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");
  std::vector<std::complex<double>> out(es.eigenvalues().begin(), es.eigenvalues().end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

std::size_t geometric_multiplicity(const Eigen::MatrixXd& a, double lambda, double tol) {
  const Eigen::MatrixXd shifted = a - lambda * Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, a.norm());
  std::size_t nullity = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] <= tol * scale) ++nullity;
  }
  return nullity;
}

Symmetrizer symmetrizer(double rho, double f, std::size_t size) {
  if (!(rho > 0.0)) throw PreconditionError("symmetrizer: rho must be positive");
  if (size < 2) throw PreconditionError("symmetrizer: size must be at least 2");
  Symmetrizer s;
  s.diagonal = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(size));
  s.diagonal[0] = f / rho;
  s.positive_definite = f > 0.0;
  return s;
}

Eigen::MatrixXd acoustic_regular_matrix(std::size_t j, double rho, std::span<const double> v,
                                        double f) {
  const std::size_t d = v.size();
  require_axis(j, d);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 2, d + 2);
  a(0, 0) = v[j];
  for (std::size_t k = 0; k < d; ++k) a(k + 2, k + 2) = v[j];
  a(0, j + 2) = rho;
  a(j + 2, 0) = f;
  return a;
}

Eigen::MatrixXd acoustic_singular_matrix(std::size_t j, std::size_t d) {
  require_axis(j, d);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 2, d + 2);
  a(1, j + 2) = 1.0;
  a(j + 2, 1) = 1.0;
  return a;
}

Eigen::MatrixXd acoustic_flux_matrix(std::size_t j, double rho, std::span<const double> v,
                                     double f, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("acoustic_flux_matrix: eps must be positive");
  return acoustic_regular_matrix(j, rho, v, f) + acoustic_singular_matrix(j, v.size()) / eps;
}

double asymmetry(const Eigen::MatrixXd& m) { return (m - m.transpose()).cwiseAbs().maxCoeff(); }

}  // namespace cif
