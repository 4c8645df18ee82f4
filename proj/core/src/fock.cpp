#include "iondyn/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace iondyn::fock {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::domain_error("ComplexMatrix: negative dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_error() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double err = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return err;
}

bool ComplexMatrix::is_hermitian(double rel_tol) const {
  if (rows_ != cols_) return false;
  return hermiticity_error() <= rel_tol * std::max(max_abs(), 1e-300);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("ComplexMatrix: shape mismatch in +=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("ComplexMatrix: shape mismatch in -=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("ComplexMatrix: shape mismatch in *");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  if (static_cast<size_t>(m.cols()) != v.size())
    throw std::invalid_argument("ComplexMatrix: shape mismatch in matvec");
  ComplexVector out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double vec_norm(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex vec_inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_inner: size mismatch");
  Complex acc{};
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

LadderPair ladder(FockSpace space) {
  if (space.cutoff < 1) throw std::domain_error("ladder: cutoff must be >= 1");
  const int d = space.dim();
  ComplexMatrix a(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ComplexMatrix adag = a.adjoint();
  return {std::move(a), std::move(adag)};
}

ComplexVector coherent_vector(double alpha, FockSpace space) {
  if (!std::isfinite(alpha)) throw std::domain_error("coherent_vector: alpha must be finite");
  const int need = static_cast<int>(std::ceil(alpha * alpha + 10.0 * std::abs(alpha) + 20.0));
  if (space.cutoff < need) {
    throw std::domain_error("coherent_vector: cutoff " + std::to_string(space.cutoff) +
                            " too small for alpha " + std::to_string(alpha) +
                            "; minimal cutoff is " + std::to_string(need));
  }
  ComplexVector c(space.dim());
  c[0] = std::exp(-alpha * alpha / 2.0);
  for (int n = 0; n < space.cutoff; ++n)
    c[n + 1] = c[n] * alpha / std::sqrt(static_cast<double>(n + 1));
  return c;
}

namespace {

// exp(z a) and exp(z a^dag) filled band by band. Entry <n| (z a)^m/m! |n+m>
// = z^m/m! sqrt((n+m)!/n!) is the only contribution to its position, so the
// finite Taylor sum (ladder matrices are nilpotent of index N+1) reduces to
// one exactly-evaluated term per entry.
enum class LadderSide { Annihilation, Creation };

ComplexMatrix expm_ladder(Complex z, LadderSide side, int dim) {
  ComplexMatrix out = ComplexMatrix::identity(dim);
  // band m: coefficient path t <- t * z * sqrt(n+m)/m along each diagonal
  for (int n = 0; n < dim; ++n) {
    Complex t = 1.0;
    for (int m = 1; n + m < dim; ++m) {
      t *= z * std::sqrt(static_cast<double>(n + m)) / static_cast<double>(m);
      if (side == LadderSide::Annihilation)
        out(n, n + m) = t;
      else
        out(n + m, n) = t;
    }
  }
  return out;
}

}  // namespace

ShiftOperator normal_ordered_shift(double eta, int sign, FockSpace space) {
  if (eta < 0.0 || !std::isfinite(eta)) throw std::domain_error("normal_ordered_shift: eta must be >= 0");
  if (sign != 1 && sign != -1) throw std::domain_error("normal_ordered_shift: sign must be +1 or -1");
  const Complex z(0.0, sign * eta);
  const int d = space.dim();
  ComplexMatrix m = expm_ladder(z, LadderSide::Creation, d) *
                    expm_ladder(z, LadderSide::Annihilation, d);
  return {std::move(m), std::exp(-eta * eta / 2.0)};
}

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix must be square");
  if (!m.is_hermitian())
    throw std::invalid_argument("hermitian_eig: input failed the Hermitian certification");

  const int n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);

  double fro = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fro += std::norm(a(i, j));
  fro = std::sqrt(fro);
  const double target = 1e-14 * std::max(fro, 1e-300);

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    off = std::sqrt(2.0 * off);
    if (off <= target) break;
    if (sweep == max_sweeps - 1)
      throw std::runtime_error("hermitian_eig: Jacobi sweep limit reached without convergence");

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // zero a(p,q) with the plane rotation G: G_pp = G_qq = c,
        // G_pq = s = t*c*phase, G_qp = -conj(s); small-angle root of
        // t^2 |apq| - t d - |apq| = 0 where d = a_pp - a_qq.
        const double d = a(p, p).real() - a(q, q).real();
        const double t =
            (d >= 0.0 ? -1.0 : 1.0) * 2.0 * mag / (std::abs(d) + std::hypot(d, 2.0 * mag));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = t * c * (apq / mag);

        // columns p, q of A and V (right-multiplication by G)
        for (int r = 0; r < n; ++r) {
          const Complex arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - std::conj(s) * arq;
          a(r, q) = s * arp + c * arq;
          const Complex vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - std::conj(s) * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
        // rows p, q of A (left-multiplication by G^dagger)
        for (int col = 0; col < n; ++col) {
          const Complex apc = a(p, col), aqc = a(q, col);
          a(p, col) = c * apc - s * aqc;
          a(q, col) = std::conj(s) * apc + c * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

ComplexMatrix unitary_step(const ComplexMatrix& hamiltonian, double dt) {
  if (!std::isfinite(dt)) throw std::domain_error("unitary_step: dt must be finite");
  const HermitianEig eig = hermitian_eig(hamiltonian);
  const int n = hamiltonian.rows();
  ComplexMatrix scaled = eig.eigenvectors;
  for (int j = 0; j < n; ++j) {
    const Complex phase = std::exp(Complex(0.0, -eig.eigenvalues[j] * dt));
    for (int i = 0; i < n; ++i) scaled(i, j) *= phase;
  }
  return scaled * eig.eigenvectors.adjoint();
}

namespace {

double inf_norm(const ComplexMatrix& m) {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

// exp(-i dt H) psi by a scaled Taylor sum; exact to roundoff because the
// sub-step magnitude |dt| ||H|| is kept below 1/2.
ComplexVector expm_apply(const ComplexMatrix& h, double dt, ComplexVector psi) {
  const double scale = std::abs(dt) * inf_norm(h);
  const int substeps = std::max(1, static_cast<int>(std::ceil(scale / 0.5)));
  const Complex factor = Complex(0.0, -dt / substeps);
  for (int s = 0; s < substeps; ++s) {
    ComplexVector term = psi;
    ComplexVector acc = psi;
    for (int m = 1; m <= 48; ++m) {
      term = h * term;
      const Complex coeff = factor / static_cast<double>(m);
      for (size_t i = 0; i < term.size(); ++i) term[i] *= coeff;
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
      if (vec_norm(term) <= 1e-18 * vec_norm(acc)) break;
      if (m == 48) throw std::runtime_error("expm_apply: Taylor sum failed to converge");
    }
    psi = std::move(acc);
  }
  return psi;
}

}  // namespace

ComplexVector evolve(const std::function<ComplexMatrix(double)>& hamiltonian_at,
                     const ComplexVector& psi0, double t0, double t1, int steps) {
  if (steps < 1) throw std::domain_error("evolve: steps must be >= 1");
  if (std::abs(vec_norm(psi0) - 1.0) > 1e-10)
    throw std::invalid_argument("evolve: psi0 must be normalized to 1e-10");

  const double dt = (t1 - t0) / steps;
  ComplexVector psi = psi0;
  for (int j = 0; j < steps; ++j) {
    const double mid = t0 + (j + 0.5) * dt;
    const ComplexMatrix h = hamiltonian_at(mid);
    if (!h.is_hermitian(1e-10))
      throw std::invalid_argument("evolve: hamiltonian_at produced a non-Hermitian matrix");
    psi = expm_apply(h, dt, std::move(psi));
  }
  return psi;
}

}  // namespace iondyn::fock
