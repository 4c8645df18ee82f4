#pragma once

#include <string>

namespace iondyn {

// Which treatment of the laser-ion coupling is in play: the full coupling
// with counter-rotating terms, or the rotating-wave approximation.
enum class HamiltonianKind { Full, Rwa };

std::string to_string(HamiltonianKind kind);

// Dimensionless configuration of a laser-driven two-level ion in a
// harmonic trap. Natural units: hbar = 1 and omega_L = 1, so every
// frequency is stored as its ratio to the laser frequency and times are
// measured in 1/omega_L.
struct SystemParams {
  double nu_ratio = 0.01;      // trap frequency nu / omega_L, >= 0
  double omega_a_ratio = 1.0;  // atomic splitting omega_A / omega_L, > 0
  double rabi_ratio = 1e-3;    // Rabi frequency Omega / omega_L, > 0
  double eta = 0.25;           // Lamb-Dicke parameter, >= 0
  double alpha = 1.0;          // coherent amplitude, real, >= 0
  int fock_dim = 96;           // oscillator cutoff N (matrix dimension N+1)

  // Throws std::domain_error when a field is non-finite or out of range.
  void validate() const;

  // validate() plus the cutoff guard fock_dim >= min_fock_dim(alpha)
  // required by every Fock-space consumer.
  void validate_for_fock() const;
};

// Smallest oscillator cutoff that keeps truncated coherent-state algebra
// converged for the given amplitude: ceil(alpha^2 + 10 alpha + 20).
int min_fock_dim(double alpha);

}  // namespace iondyn
