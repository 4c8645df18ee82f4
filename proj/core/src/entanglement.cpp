#include "iondyn/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace iondyn::ent {

using fock::Complex;
using fock::ComplexMatrix;

namespace {

constexpr Complex kI{0.0, 1.0};

// sigma_y (x) sigma_y in the ordered basis {g0, g1, e0, e1}
ComplexMatrix spin_flip_matrix() {
  ComplexMatrix y(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

ComplexMatrix conjugated(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

// Eigenvalues below 64 eps of the top of the spectrum are numerical noise on
// exact zeros; clamp them so the later square roots do not amplify roundoff
// into sqrt(eps)-sized artifacts.
std::pair<std::vector<double>, ComplexMatrix> psd_spectrum(const ComplexMatrix& m) {
  fock::HermitianEig eig = fock::hermitian_eig(m);
  double top = 0.0;
  for (double w : eig.eigenvalues) top = std::max(top, w);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * top;
  for (double& w : eig.eigenvalues) {
    if (w < -1e-8) throw std::runtime_error("wootters: eigenvalue below the -1e-8 PSD bound");
    if (w < floor) w = 0.0;
  }
  return {std::move(eig.eigenvalues), std::move(eig.eigenvectors)};
}

}  // namespace

QubitMap orthogonalize(double alpha) {
  if (alpha < 0.0 || !std::isfinite(alpha))
    throw std::domain_error("orthogonalize: alpha must be >= 0");
  const double p = std::exp(-2.0 * alpha * alpha);
  return {p, std::sqrt(1.0 - p * p)};
}

TwoQubitDensity TwoQubitDensity::from_matrix(fock::ComplexMatrix m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("TwoQubitDensity: matrix must be 4x4");
  if (m.hermiticity_error() > 1e-12)
    throw std::invalid_argument("TwoQubitDensity: matrix is not Hermitian to 1e-12");
  Complex tr{};
  for (int i = 0; i < 4; ++i) tr += m(i, i);
  if (std::abs(tr - Complex{1.0, 0.0}) > 1e-12)
    throw std::invalid_argument("TwoQubitDensity: trace must be 1 to 1e-12");
  const fock::HermitianEig eig = fock::hermitian_eig(m);
  if (eig.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("TwoQubitDensity: spectrum dips below -1e-10");
  return TwoQubitDensity(std::move(m));
}

TwoQubitDensity density_from_state(double theta, double alpha) {
  const QubitMap q = orthogonalize(alpha);
  const double c = std::cos(theta), s = std::sin(theta);

  // outer product of (c, 0, -i s p, -i s m); source of truth
  const Complex psi[4] = {c, 0.0, -kI * s * q.p, -kI * s * q.m};
  ComplexMatrix rho(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);

  // block form of the same state; a checked derivation
  const double s2 = std::sin(2.0 * theta);
  ComplexMatrix blocks(4, 4);
  blocks(0, 0) = c * c;
  blocks(2, 2) = s * s * q.p * q.p;
  blocks(3, 3) = s * s * q.m * q.m;
  blocks(2, 3) = s * s * q.p * q.m;
  blocks(3, 2) = s * s * q.p * q.m;
  blocks(2, 0) = -kI * 0.5 * s2 * q.p;
  blocks(3, 0) = -kI * 0.5 * s2 * q.m;
  blocks(0, 2) = kI * 0.5 * s2 * q.p;
  blocks(0, 3) = kI * 0.5 * s2 * q.m;

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(rho(i, j) - blocks(i, j)) > 1e-12)
        throw std::runtime_error("density_from_state: construction paths disagree beyond 1e-12");

  return TwoQubitDensity::from_matrix(std::move(rho));
}

fock::ComplexMatrix spin_flip(const TwoQubitDensity& rho) {
  const ComplexMatrix y = spin_flip_matrix();
  return y * conjugated(rho.matrix()) * y;
}

double wootters(const TwoQubitDensity& rho) {
  auto [w, v] = psd_spectrum(rho.matrix());

  ComplexMatrix sqrt_rho(4, 4);
  {
    ComplexMatrix scaled = v;
    for (int j = 0; j < 4; ++j) {
      const double r = std::sqrt(w[j]);
      for (int i = 0; i < 4; ++i) scaled(i, j) *= r;
    }
    sqrt_rho = scaled * v.adjoint();
  }

  ComplexMatrix s = sqrt_rho * spin_flip(rho) * sqrt_rho;
  // re-hermitize before the eigensolve; s is Hermitian up to roundoff
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const Complex avg = 0.5 * (s(i, j) + std::conj(s(j, i)));
      s(i, j) = avg;
      s(j, i) = std::conj(avg);
    }

  auto [lam, unused] = psd_spectrum(s);
  (void)unused;
  std::sort(lam.begin(), lam.end(), std::greater<>());
  const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);
  return std::max(0.0, c);
}

double pure_concurrence(Complex a, Complex b, Complex c, Complex d) {
  const double norm2 = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw std::invalid_argument("pure_concurrence: amplitudes must be normalized to 1e-10");
  return 2.0 * std::abs(a * d - b * c);
}

}  // namespace iondyn::ent
