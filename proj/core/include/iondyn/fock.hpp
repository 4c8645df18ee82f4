#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace iondyn::fock {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense complex matrix, row-major. Plain value type: copy, add, multiply.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  ComplexMatrix adjoint() const;
  double max_abs() const;
  // max_ij |M - M^dagger|; zero for exactly Hermitian matrices
  double hermiticity_error() const;
  bool is_hermitian(double rel_tol = 1e-12) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

double vec_norm(const ComplexVector& v);
// conjugate-linear in the first argument
Complex vec_inner(const ComplexVector& a, const ComplexVector& b);

// Truncated oscillator: occupation numbers 0..cutoff, dimension cutoff+1.
struct FockSpace {
  int cutoff;
  int dim() const { return cutoff + 1; }
};

struct LadderPair {
  ComplexMatrix annihilation;
  ComplexMatrix creation;
};

// a|n> = sqrt(n)|n-1>; creation is the conjugate transpose.
LadderPair ladder(FockSpace space);

// Coherent-state coefficients c_n = e^{-alpha^2/2} alpha^n / sqrt(n!) via the
// stable recurrence c_{n+1} = c_n alpha / sqrt(n+1). Requires the cutoff
// guard; throws std::domain_error naming the minimal cutoff otherwise.
ComplexVector coherent_vector(double alpha, FockSpace space);

struct ShiftOperator {
  ComplexMatrix matrix;  // e^{i s eta a^dag} e^{i s eta a}
  double scalar;         // e^{-eta^2/2}
};

// Normal-ordered displacement factors. The two ladder exponentials are exact
// finite Taylor sums (truncated ladder operators are nilpotent of index N+1).
ShiftOperator normal_ordered_shift(double eta, int sign, FockSpace space);

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, columns matching eigenvalues
};

// Cyclic Jacobi rotations for complex Hermitian matrices. Converges when the
// off-diagonal Frobenius mass drops below 1e-14 of the input norm. Input must
// certify Hermitian (hermiticity_error <= 1e-12 * max_abs).
HermitianEig hermitian_eig(const ComplexMatrix& m);

// exp(-i H dt) through the eigendecomposition of H.
ComplexMatrix unitary_step(const ComplexMatrix& hamiltonian, double dt);

// Midpoint piecewise-constant propagation over [t0, t1] with uniform steps:
// psi <- exp(-i H(t_mid) dt) psi on each sub-interval. Second order in dt.
// psi0 must be normalized to 1e-10.
ComplexVector evolve(const std::function<ComplexMatrix(double)>& hamiltonian_at,
                     const ComplexVector& psi0, double t0, double t1, int steps);

}  // namespace iondyn::fock
