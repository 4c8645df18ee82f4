#pragma once

#include "iondyn/fock.hpp"

namespace iondyn::ent {

// Orthogonalization of the coherent pair {|alpha>, |-alpha>}:
// |-alpha> = p |0bar> + m |1bar> with |0bar> = |alpha>.
struct QubitMap {
  double p;  // overlap e^{-2 alpha^2}
  double m;  // complement sqrt(1 - e^{-4 alpha^2})
};

QubitMap orthogonalize(double alpha);

// 4x4 density matrix over the ordered basis {|g,0bar>, |g,1bar>, |e,0bar>,
// |e,1bar>}. Construction enforces Hermiticity (1e-12), unit trace (1e-12)
// and spectrum >= -1e-10.
class TwoQubitDensity {
 public:
  static TwoQubitDensity from_matrix(fock::ComplexMatrix m);
  const fock::ComplexMatrix& matrix() const { return m_; }

 private:
  explicit TwoQubitDensity(fock::ComplexMatrix m) : m_(std::move(m)) {}
  fock::ComplexMatrix m_;
};

// Density of cos(theta)|g,0bar> - i sin(theta)(p|e,0bar> + m|e,1bar>),
// assembled as a direct outer product and cross-checked entrywise (1e-12)
// against the block-form construction; disagreement raises
// std::runtime_error.
TwoQubitDensity density_from_state(double theta, double alpha);

// (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y); rows/columns (g, e)
// with <g|sigma_y|e> = -i.
fock::ComplexMatrix spin_flip(const TwoQubitDensity& rho);

// Wootters concurrence via the Hermitian route sqrt(rho) rho_tilde sqrt(rho).
// Spectrum entries below the relative noise floor are clamped to zero before
// the square roots; a negative eigenvalue below -1e-8 raises
// std::runtime_error.
double wootters(const TwoQubitDensity& rho);

// Pure-state identity C = 2|ad - bc| over {|g0>, |g1>, |e0>, |e1>}; the
// independent oracle for wootters(). Input must be normalized to 1e-10.
double pure_concurrence(fock::Complex a, fock::Complex b, fock::Complex c,
                        fock::Complex d);

}  // namespace iondyn::ent
