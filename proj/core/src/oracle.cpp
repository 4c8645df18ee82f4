#include "iondyn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "iondyn/entanglement.hpp"

namespace iondyn::oracle {

using fock::Complex;
using fock::ComplexMatrix;
using fock::ComplexVector;
using fock::FockSpace;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TwoLevel {
  Complex gg, ge, eg, ee;
};

constexpr TwoLevel kSigmaZ{-1.0, 0.0, 0.0, 1.0};  // |e><e| - |g><g|
constexpr TwoLevel kSigmaX{0.0, 1.0, 1.0, 0.0};
constexpr TwoLevel kSigmaMinus{0.0, 1.0, 0.0, 0.0};  // |g><e|
constexpr TwoLevel kSigmaPlus{0.0, 0.0, 1.0, 0.0};   // |e><g|
constexpr TwoLevel kIdentity2{1.0, 0.0, 0.0, 1.0};

// H += coeff * (s (x) mot), blocks [g | e]
void add_kron(ComplexMatrix& h, Complex coeff, const TwoLevel& s, const ComplexMatrix& mot) {
  const int d = mot.rows();
  const TwoLevel scaled{coeff * s.gg, coeff * s.ge, coeff * s.eg, coeff * s.ee};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex m = mot(i, j);
      if (m == Complex{}) continue;
      if (scaled.gg != Complex{}) h(i, j) += scaled.gg * m;
      if (scaled.ge != Complex{}) h(i, j + d) += scaled.ge * m;
      if (scaled.eg != Complex{}) h(i + d, j) += scaled.eg * m;
      if (scaled.ee != Complex{}) h(i + d, j + d) += scaled.ee * m;
    }
  }
}

void certify_hermitian(const ComplexMatrix& h, const char* builder) {
  if (h.hermiticity_error() > 1e-12 * std::max(h.max_abs(), 1e-300))
    throw std::runtime_error(std::string(builder) + ": Hermiticity certification failed");
}

// shared structure of all four builders
ComplexMatrix assemble(HamiltonianKind kind, const SystemParams& p, double t, FockSpace space,
                       bool rotated_frame) {
  p.validate();
  if (!std::isfinite(t)) throw std::domain_error("hamiltonian builder: t must be finite");

  const auto [a, adag] = fock::ladder(space);
  const ComplexMatrix number_op = adag * a;
  const auto shift_minus = fock::normal_ordered_shift(p.eta, -1, space);
  const auto shift_plus = fock::normal_ordered_shift(p.eta, +1, space);
  const ComplexMatrix mot_id = ComplexMatrix::identity(space.dim());

  const int dim = 2 * space.dim();
  ComplexMatrix h(dim, dim);
  add_kron(h, p.nu_ratio, kIdentity2, number_op);
  if (rotated_frame) {
    add_kron(h, -p.omega_a_ratio, kSigmaX, mot_id);
  } else {
    add_kron(h, p.omega_a_ratio, kSigmaZ, mot_id);
  }

  const Complex phase = std::exp(Complex(0.0, t));
  const double coupling = 0.5 * p.rabi_ratio * shift_minus.scalar;
  if (kind == HamiltonianKind::Full) {
    const TwoLevel& s = rotated_frame ? kSigmaZ : kSigmaX;
    add_kron(h, coupling * phase, s, shift_minus.matrix);
    add_kron(h, coupling * std::conj(phase), s, shift_plus.matrix);
  } else {
    add_kron(h, coupling * phase, kSigmaMinus, shift_minus.matrix);
    add_kron(h, coupling * std::conj(phase), kSigmaPlus, shift_plus.matrix);
  }
  return h;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string grid_params(HamiltonianKind kind, double eta, double alpha, int k, int n) {
  return "kind=" + to_string(kind) + " eta=" + format_double(eta) +
         " alpha=" + format_double(alpha) + " k=" + std::to_string(k) +
         " n=" + std::to_string(n);
}

}  // namespace

ProductState e_alpha_state(double alpha, FockSpace space) {
  const ComplexVector c = fock::coherent_vector(alpha, space);
  ComplexVector amps(2 * space.dim());
  std::copy(c.begin(), c.end(), amps.begin() + space.dim());
  return {std::move(amps)};
}

BasisPair basis_vectors(double alpha, FockSpace space) {
  const ComplexVector ca = fock::coherent_vector(alpha, space);
  const ComplexVector cma = fock::coherent_vector(-alpha, space);
  const int d = space.dim();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ProductState plus{ComplexVector(2 * d)}, minus{ComplexVector(2 * d)};
  for (int n = 0; n < d; ++n) {
    plus.amplitudes[n] = inv_sqrt2 * cma[n];
    plus.amplitudes[d + n] = inv_sqrt2 * ca[n];
    minus.amplitudes[n] = -inv_sqrt2 * cma[n];
    minus.amplitudes[d + n] = inv_sqrt2 * ca[n];
  }
  return {std::move(plus), std::move(minus)};
}

ComplexMatrix build_rotated_hamiltonian(HamiltonianKind kind, const SystemParams& p, double t,
                                        FockSpace space) {
  ComplexMatrix h = assemble(kind, p, t, space, /*rotated_frame=*/true);
  certify_hermitian(h, "build_rotated_hamiltonian");
  return h;
}

ComplexMatrix build_lab_hamiltonian(HamiltonianKind kind, const SystemParams& p, double t,
                                    FockSpace space) {
  ComplexMatrix h = assemble(kind, p, t, space, /*rotated_frame=*/false);
  certify_hermitian(h, "build_lab_hamiltonian");
  return h;
}

ComplexMatrix build_lab_hamiltonian(const SystemParams& p, double t, FockSpace space) {
  return build_lab_hamiltonian(HamiltonianKind::Full, p, t, space);
}

double rotation_equivalence_residual(const SystemParams& p, double t, FockSpace space) {
  const ComplexMatrix lab = build_lab_hamiltonian(p, t, space);
  const ComplexMatrix rot = build_rotated_hamiltonian(HamiltonianKind::Full, p, t, space);

  // R = ((1, -1), (1, 1))/sqrt(2) on the internal factor: the pi/2 Bloch
  // rotation about y taking sigma_z -> -sigma_x and sigma_x -> sigma_z.
  const int dim = 2 * space.dim();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix r(dim, dim);
  add_kron(r, inv_sqrt2, TwoLevel{1.0, -1.0, 1.0, 1.0}, ComplexMatrix::identity(space.dim()));

  const ComplexMatrix transformed = r * lab * r.adjoint();
  ComplexMatrix diff = transformed;
  diff -= rot;
  return diff.max_abs() / std::max(rot.max_abs(), 1e-300);
}

double TwoByTwo::max_abs() const {
  return std::max(std::max(std::abs(h11), std::abs(h12)),
                  std::max(std::abs(h21), std::abs(h22)));
}

TwoByTwo project_2x2(const ComplexMatrix& h, const ProductState& plus, const ProductState& minus) {
  const ComplexVector h_plus = h * plus.amplitudes;
  const ComplexVector h_minus = h * minus.amplitudes;
  return {fock::vec_inner(plus.amplitudes, h_plus), fock::vec_inner(plus.amplitudes, h_minus),
          fock::vec_inner(minus.amplitudes, h_plus), fock::vec_inner(minus.amplitudes, h_minus)};
}

double offdiagonal_residual_at(HamiltonianKind kind, const SystemParams& p, double t,
                               FockSpace space) {
  const ComplexMatrix h = build_rotated_hamiltonian(kind, p, t, space);
  const BasisPair basis = basis_vectors(p.alpha, space);
  const TwoByTwo proj = project_2x2(h, basis.psi_plus, basis.psi_minus);
  const double scale = std::max(proj.max_abs(), 1e-300);
  return std::max(std::abs(proj.h12), std::abs(proj.h21)) / scale;
}

double verify_offdiagonal(HamiltonianKind kind, const SystemParams& p, int k, FockSpace space) {
  return offdiagonal_residual_at(kind, p, diag_time(kind, k), space);
}

DiagonalCheck verify_diagonal(HamiltonianKind kind, const SystemParams& p, int k, FockSpace space) {
  const ComplexMatrix h = build_rotated_hamiltonian(kind, p, diag_time(kind, k), space);
  const BasisPair basis = basis_vectors(p.alpha, space);
  const TwoByTwo proj = project_2x2(h, basis.psi_plus, basis.psi_minus);
  const double d_plus = proj.h11.real();
  const double d_minus = proj.h22.real();

  const EnergyPair closed = energies(kind, p, k);
  const auto rel = [](double measured, double analytic) {
    return std::abs(measured - analytic) / std::max(std::abs(analytic), 1e-30);
  };
  const double direct = std::max(rel(d_plus, closed.h11), rel(d_minus, closed.h22));
  const double swapped = std::max(rel(d_plus, closed.h22), rel(d_minus, closed.h11));

  DiagonalCheck out;
  out.deviation_direct = direct;
  out.deviation_swapped = swapped;
  out.mapping = direct <= swapped ? "direct" : "swapped";
  out.deviation = std::min(direct, swapped);

  // measured interaction contribution relative to the closed-form term
  const double base = p.nu_ratio * p.alpha * p.alpha -
                      p.omega_a_ratio * std::exp(-2.0 * p.alpha * p.alpha);
  const double measured_first = (out.mapping == "direct" ? d_plus : d_minus) - base;
  const double closed_term = closed.h11 - base;
  out.interaction_ratio =
      std::abs(closed_term) > 1e-13 ? measured_first / closed_term : kNaN;
  return out;
}

std::vector<EvolutionSample> evolve_and_compare(HamiltonianKind kind, const SystemParams& p,
                                                int periods, int steps_per_period,
                                                FockSpace space) {
  p.validate();
  if (periods < 1) throw std::domain_error("evolve_and_compare: periods must be >= 1");
  if (steps_per_period < 1)
    throw std::domain_error("evolve_and_compare: steps_per_period must be >= 1");

  const double period = 2.0 * M_PI;
  const double horizon = periods * period;

  // uniform samples plus every diagonalization time in the horizon
  std::vector<double> times;
  const int per_period = 16;
  for (int j = 0; j <= periods * per_period; ++j) times.push_back(j * period / per_period);
  for (int k = 0;; ++k) {
    const double tk = diag_time(kind, k);
    if (tk > horizon) break;
    times.push_back(tk);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              times.end());

  const auto hamiltonian_at = [&](double t) { return build_lab_hamiltonian(kind, p, t, space); };

  ProductState state = e_alpha_state(p.alpha, space);
  const int d = space.dim();

  std::vector<EvolutionSample> series;
  series.reserve(times.size());
  double t_prev = 0.0;
  for (double t : times) {
    if (t > t_prev) {
      const int steps =
          std::max(1, static_cast<int>(std::lround(steps_per_period * (t - t_prev) / period)));
      state.amplitudes = fock::evolve(hamiltonian_at, state.amplitudes, t_prev, t, steps);
      t_prev = t;
    }

    const double nrm = state.norm();
    const double drift = std::abs(nrm - 1.0);
    if (drift > 1e-8)
      throw std::runtime_error("evolve_and_compare: norm drift exceeded 1e-8; propagation quality lost");

    double pg = 0.0;
    Complex rho_ge{};
    for (int n = 0; n < d; ++n) {
      pg += std::norm(state.amplitudes[n]);
      rho_ge += state.amplitudes[n] * std::conj(state.amplitudes[d + n]);
    }
    const double rho_gg = pg;
    const double rho_ee = nrm * nrm - pg;
    const double purity = rho_gg * rho_gg + rho_ee * rho_ee + 2.0 * std::norm(rho_ge);
    const double c_num = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));

    // closed forms as continuous-time curves; the RWA angle needs the step
    // index, taken as the nearest diagonalization step
    const int k_near = kind == HamiltonianKind::Full
                           ? 0
                           : static_cast<int>(std::lround(t / M_PI));
    const double theta = angles(kind, p, t, k_near).theta;
    const double cos_th = std::cos(theta);
    const double sin_th = std::sin(theta);

    series.push_back({t, pg, sin_th * sin_th, cos_th * cos_th, c_num,
                      concurrence_closed_form(kind, p, t, k_near), drift});
  }
  return series;
}

ThetaPrimeRecord theta_prime_consistency(const SystemParams& p, int k) {
  p.validate();
  const double t = diag_time(HamiltonianKind::Rwa, k);
  const double literal = angles(HamiltonianKind::Rwa, p, t, k).theta;
  const EnergyPair e = energies(HamiltonianKind::Rwa, p, k);
  const double from_energies = t * (e.h22 - e.h11) / 2.0;
  return {k, t, literal, from_energies, std::abs(literal - from_energies)};
}

namespace {

int count_interior_extrema(const std::vector<double>& v) {
  int count = 0;
  for (size_t i = 1; i + 1 < v.size(); ++i) {
    if ((v[i] - v[i - 1]) * (v[i + 1] - v[i]) < 0.0) ++count;
  }
  return count;
}

}  // namespace

ValidationReport run_validation(const ValidationOptions& options) {
  const SystemParams& base = options.base;
  base.validate();

  double alpha_max = 0.0;
  for (double a : options.alpha_grid) alpha_max = std::max(alpha_max, a);
  const int need = min_fock_dim(alpha_max);
  if (base.fock_dim < need) {
    throw std::domain_error("run_validation: fock_dim " + std::to_string(base.fock_dim) +
                            " below the amplitude guard; minimal cutoff is " +
                            std::to_string(need));
  }

  const FockSpace space{base.fock_dim};
  ValidationReport report;

  // --- basis orthonormality -------------------------------------------------
  for (double alpha : options.alpha_grid) {
    const BasisPair basis = basis_vectors(alpha, space);
    const double overlap =
        std::abs(fock::vec_inner(basis.psi_plus.amplitudes, basis.psi_minus.amplitudes));
    const double residual = std::max({std::abs(basis.psi_plus.norm() - 1.0),
                                      std::abs(basis.psi_minus.norm() - 1.0), overlap});
    CheckRecord rec;
    rec.check = "basis_orthonormality";
    rec.params = "alpha=" + format_double(alpha) + " n=" + std::to_string(space.cutoff);
    rec.residual = residual;
    rec.tolerance = 1e-10;
    rec.hard = true;
    rec.pass = residual <= rec.tolerance;
    report.add(std::move(rec));
  }

  // --- rotation equivalence (alpha-independent) ------------------------------
  for (double eta : options.eta_grid) {
    for (double t : {0.0, 0.7, 1.3, 2.9, 5.11}) {
      SystemParams p = base;
      p.eta = eta;
      const double residual = rotation_equivalence_residual(p, t, space);
      CheckRecord rec;
      rec.check = "rotation_equivalence";
      rec.params = "eta=" + format_double(eta) + " t=" + format_double(t) +
                   " n=" + std::to_string(space.cutoff);
      rec.residual = residual;
      rec.tolerance = 1e-10;
      rec.hard = true;
      rec.pass = residual <= rec.tolerance;
      report.add(std::move(rec));
    }
  }

  // --- off-diagonals at the diagonalization times ----------------------------
  for (HamiltonianKind kind : {HamiltonianKind::Full, HamiltonianKind::Rwa}) {
    for (double eta : options.eta_grid) {
      for (double alpha : options.alpha_grid) {
        SystemParams p = base;
        p.eta = eta;
        p.alpha = alpha;
        for (int k = 0; k <= options.k_max; ++k) {
          const double residual = verify_offdiagonal(kind, p, k, space);
          CheckRecord rec;
          rec.check = "offdiagonal_at_diag_times";
          rec.params = grid_params(kind, eta, alpha, k, space.cutoff);
          rec.residual = residual;
          rec.tolerance = 1e-8;
          rec.hard = true;
          rec.pass = residual <= rec.tolerance;
          report.add(std::move(rec));
        }
      }
    }
  }

  // --- negative control: mid-interval times, several coupling strengths ------
  {
    bool any_above_threshold = false;
    for (double rabi : {base.rabi_ratio, 0.05, 0.5}) {
      for (double eta : options.eta_grid) {
        for (double alpha : options.alpha_grid) {
          SystemParams p = base;
          p.eta = eta;
          p.alpha = alpha;
          p.rabi_ratio = rabi;
          const double amplitude = rabi * std::exp(-eta * eta / 2.0) *
                                   std::abs(std::cos(2.0 * eta * alpha));
          const double residual =
              offdiagonal_residual_at(HamiltonianKind::Full, p, 0.0, space);
          const bool applicable = amplitude >= 1e-2;
          any_above_threshold = any_above_threshold || applicable;
          CheckRecord rec;
          rec.check = "offdiagonal_negative_control";
          rec.params = "eta=" + format_double(eta) + " alpha=" + format_double(alpha) +
                       " rabi=" + format_double(rabi) + " t=0 n=" + std::to_string(space.cutoff);
          rec.residual = residual;
          rec.tolerance = 1e-3;
          rec.comparison = ">=";
          rec.hard = true;
          rec.pass = !applicable || residual >= rec.tolerance;
          rec.values = {{"amplitude", amplitude}};
          if (!applicable) rec.note = "coupling amplitude below 1e-2; bound not applicable";
          report.add(std::move(rec));
        }
      }
    }
    if (!any_above_threshold)
      report.add_finding("offdiagonal_negative_control: no sampled point reached the 1e-2 "
                         "amplitude threshold; the control was vacuous");
  }

  // --- diagonal elements vs closed forms -------------------------------------
  {
    double ratio_sum = 0.0;
    int ratio_count = 0;
    double worst_full = 0.0;
    for (HamiltonianKind kind : {HamiltonianKind::Full, HamiltonianKind::Rwa}) {
      for (double eta : options.eta_grid) {
        for (double alpha : options.alpha_grid) {
          SystemParams p = base;
          p.eta = eta;
          p.alpha = alpha;
          for (int k = 0; k <= options.k_max; ++k) {
            const DiagonalCheck check = verify_diagonal(kind, p, k, space);
            CheckRecord rec;
            rec.check = "diagonal_elements";
            rec.params = grid_params(kind, eta, alpha, k, space.cutoff);
            rec.residual = check.deviation;
            rec.tolerance = 1e-6;
            rec.hard = true;
            rec.pass = check.deviation <= rec.tolerance;
            rec.note = "mapping=" + check.mapping;
            if (!std::isnan(check.interaction_ratio))
              rec.values = {{"interaction_ratio", check.interaction_ratio}};
            report.add(std::move(rec));

            if (kind == HamiltonianKind::Full && !std::isnan(check.interaction_ratio) &&
                std::abs(std::sin(2.0 * eta * alpha)) > 1e-3) {
              ratio_sum += check.interaction_ratio;
              ratio_count += 1;
              worst_full = std::max(worst_full, check.deviation);
            }
          }
        }
      }
    }
    if (ratio_count > 0) {
      const double mean_ratio = ratio_sum / ratio_count;
      if (std::abs(mean_ratio - 1.0) > 1e-3) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "diagonal_elements[full]: the projected interaction contribution is "
                      "%.6f times the closed-form interaction term wherever sin(2 eta alpha) "
                      "is nonzero (grid mean over %d points; worst relative deviation %.3e); "
                      "the closed-form coefficient is not reproduced and the mismatch scales "
                      "with rabi_ratio",
                      mean_ratio, ratio_count, worst_full);
        report.add_finding(buf);
      }
    }
  }

  // --- theta-prime readings (report only) -------------------------------------
  for (double eta : options.eta_grid) {
    for (double alpha : options.alpha_grid) {
      SystemParams p = base;
      p.eta = eta;
      p.alpha = alpha;
      for (int k = 0; k <= options.k_max; ++k) {
        const ThetaPrimeRecord tp = theta_prime_consistency(p, k);
        CheckRecord rec;
        rec.check = "theta_prime_consistency";
        rec.params = "eta=" + format_double(eta) + " alpha=" + format_double(alpha) +
                     " k=" + std::to_string(k);
        rec.residual = tp.gap;
        rec.hard = false;
        rec.pass = true;
        rec.values = {{"theta_literal", tp.theta_literal},
                      {"theta_from_energies", tp.theta_from_energies},
                      {"t", tp.t}};
        report.add(std::move(rec));
      }
    }
  }
  {
    // which reading shows the documented high-frequency odd-step behavior
    SystemParams p = base;
    p.eta = 0.0;
    const int k = 3;
    std::vector<double> literal_curve, energy_curve;
    for (int i = 0; i <= 200; ++i) {
      const double alpha = 1.5 + 0.5 * i / 200.0;
      p.alpha = alpha;
      literal_curve.push_back(ground_probability_at_step(HamiltonianKind::Rwa, p, k));
      const EnergyPair e = energies(HamiltonianKind::Rwa, p, k);
      const double t = diag_time(HamiltonianKind::Rwa, k);
      const double theta = t * (e.h22 - e.h11) / 2.0;
      energy_curve.push_back(std::cos(theta) * std::cos(theta));
    }
    const int n_lit = count_interior_extrema(literal_curve);
    const int n_en = count_interior_extrema(energy_curve);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "theta_prime_consistency: the literal reading (step parity inside the "
                  "exponent) yields %d interior extrema of the odd-step ground probability on "
                  "alpha in [1.5, 2] at k=3; the energy-difference reading yields %d. The "
                  "high-frequency oscillation belongs to the literal reading, which the "
                  "figure emission follows.",
                  n_lit, n_en);
    report.add_finding(buf);
  }

  // --- concurrence relation (report only) -------------------------------------
  {
    double worst_square = 0.0, worst_identity = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double theta = 0.01 + (M_PI / 2.0 - 0.02) * i / 49.0;
      for (int j = 0; j < 50; ++j) {
        const double alpha = 0.04 + (2.0 - 0.04) * j / 49.0;
        const double w = ent::wootters(ent::density_from_state(theta, alpha));
        const double closed =
            0.5 * (1.0 - std::exp(-4.0 * alpha * alpha)) * (1.0 - std::cos(4.0 * theta));
        worst_square = std::max(worst_square, std::abs(closed - w * w));
        worst_identity = std::max(worst_identity, std::abs(closed - w));
      }
    }
    CheckRecord rec;
    rec.check = "concurrence_relation";
    rec.params = "grid=50x50 theta=(0.01,pi/2) alpha=(0.04,2)";
    rec.residual = worst_square;
    rec.hard = false;
    rec.pass = true;
    rec.values = {{"max_dev_square_hypothesis", worst_square},
                  {"max_dev_identity_hypothesis", worst_identity}};
    report.add(std::move(rec));
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "concurrence_relation: the closed-form entanglement expression coincides "
                  "with the SQUARE of the Wootters concurrence on the evolved-state family "
                  "(max |closed - C^2| = %.3e vs max |closed - C| = %.3e on a 50x50 grid); "
                  "the closed form is the tangle, not the concurrence",
                  worst_square, worst_identity);
    report.add_finding(buf);
  }

  // --- continuum-time deviation (report only) + norm conservation (hard) ------
  for (HamiltonianKind kind : {HamiltonianKind::Full, HamiltonianKind::Rwa}) {
    SystemParams p = base;
    const std::vector<EvolutionSample> series =
        evolve_and_compare(kind, p, options.periods, options.steps_per_period, space);
    double max_dev_lab = 0.0, max_dev_rot = 0.0, max_drift = 0.0;
    for (const EvolutionSample& s : series) {
      max_dev_lab = std::max(max_dev_lab, std::abs(s.p_g_numeric - s.p_g_analytic_lab));
      max_dev_rot = std::max(max_dev_rot, std::abs(s.p_g_numeric - s.p_g_analytic_rotated));
      max_drift = std::max(max_drift, s.norm_drift);
    }
    {
      CheckRecord rec;
      rec.check = "norm_conservation";
      rec.params = "kind=" + to_string(kind) + " periods=" + std::to_string(options.periods) +
                   " steps_per_period=" + std::to_string(options.steps_per_period) +
                   " n=" + std::to_string(space.cutoff);
      rec.residual = max_drift;
      rec.tolerance = 1e-9;
      rec.hard = true;
      rec.pass = max_drift <= rec.tolerance;
      report.add(std::move(rec));
    }
    {
      CheckRecord rec;
      rec.check = "continuum_time_deviation";
      rec.params = "kind=" + to_string(kind) + " periods=" + std::to_string(options.periods) +
                   " eta=" + format_double(p.eta) + " alpha=" + format_double(p.alpha);
      rec.residual = std::min(max_dev_lab, max_dev_rot);
      rec.hard = false;
      rec.pass = true;
      rec.values = {{"max_dev_lab_frame", max_dev_lab},
                    {"max_dev_rotated_frame", max_dev_rot}};
      rec.note = "closed-form angle dynamics vs propagation; reported without a tolerance";
      report.add(std::move(rec));
    }
  }

  report.sort();
  return report;
}

}  // namespace iondyn::oracle
