#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "bdf3ns/diagnostics.hpp"
#include "bdf3ns/errors.hpp"
#include "bdf3ns/spectral.hpp"

namespace bdf3ns {
namespace {

using Vec10 = Eigen::Matrix<double, 10, 1>;
using Mat10 = Eigen::Matrix<double, 10, 10>;

// BDF3 stencil applied to (f^{n+1}, f^n, f^{n-1}, f^{n-2}) and the test vector 2 f^{n+1} - f^n.
constexpr std::array<double, 4> kStencil{11.0 / 6.0, -3.0, 1.5, -1.0 / 3.0};
constexpr std::array<double, 4> kMultiplier{2.0, -1.0, 0.0, 0.0};

// A linear form in (a, b, c, d) whose entries are single alphas (index) or zero (-1).
struct LinearForm {
  double sign;
  std::array<int, 4> alpha_index;
};

constexpr std::array<LinearForm, 7> kForms{{
    {+1.0, {0, -1, -1, -1}},
    {+1.0, {1, 2, -1, -1}},
    {+1.0, {3, 4, 5, -1}},
    {+1.0, {6, 7, 8, 9}},
    {-1.0, {-1, 0, -1, -1}},
    {-1.0, {-1, 1, 2, -1}},
    {-1.0, {-1, 3, 4, 5}},
}};

// Monomials a^2, ab, ac, ad, b^2, bc, bd, c^2, cd, d^2.
constexpr std::array<std::array<int, 2>, 10> kMonomials{{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

double entry(const LinearForm& f, int var, const Vec10& alpha) {
  const int idx = f.alpha_index[static_cast<std::size_t>(var)];
  return idx < 0 ? 0.0 : alpha[idx];
}

Vec10 residual(const Vec10& alpha) {
  Vec10 r;
  for (int m = 0; m < 10; ++m) {
    const auto [i, j] = kMonomials[static_cast<std::size_t>(m)];
    const double mult = i == j ? 1.0 : 2.0;
    double rhs = 0.0;
    for (const auto& f : kForms) rhs += f.sign * entry(f, i, alpha) * entry(f, j, alpha);
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    const double lhs =
        i == j ? kStencil[ui] * kMultiplier[ui] : kStencil[ui] * kMultiplier[uj] + kStencil[uj] * kMultiplier[ui];
    r[m] = mult * rhs - lhs;
  }
  return r;
}

Mat10 jacobian(const Vec10& alpha) {
  Mat10 jac = Mat10::Zero();
  for (int m = 0; m < 10; ++m) {
    const auto [i, j] = kMonomials[static_cast<std::size_t>(m)];
    const double mult = i == j ? 1.0 : 2.0;
    for (const auto& f : kForms) {
      const int ki = f.alpha_index[static_cast<std::size_t>(i)];
      const int kj = f.alpha_index[static_cast<std::size_t>(j)];
      if (ki >= 0) jac(m, ki) += mult * f.sign * entry(f, j, alpha);
      if (kj >= 0) jac(m, kj) += mult * f.sign * entry(f, i, alpha);
    }
  }
  return jac;
}

double max_entry(const Vec10& v) { return v.cwiseAbs().maxCoeff(); }

// Setting all four arguments equal makes the left side vanish, so the
// remainder form must annihilate (1,1,1,1): alpha_10 = -(alpha_7+alpha_8+alpha_9).
// The monomial equations only see that sum squared, so it is eliminated
// explicitly instead of being left to the iteration.
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat10x9 = Eigen::Matrix<double, 10, 9>;

Mat10x9 reduction() {
  Mat10x9 t = Mat10x9::Zero();
  for (int i = 0; i < 9; ++i) t(i, i) = 1.0;
  t(9, 6) = t(9, 7) = t(9, 8) = -1.0;
  return t;
}

// Levenberg-Marquardt in the reduced coordinates; returns the final max-abs residual.
double damped_newton(Vec10& alpha, int max_iterations, double target) {
  static const Mat10x9 t = reduction();
  Vec9 beta = alpha.head<9>();
  alpha = t * beta;
  double mu = 1e-3;
  Vec10 r = residual(alpha);
  double cost = r.squaredNorm();
  for (int it = 0; it < max_iterations && max_entry(r) > target; ++it) {
    const Eigen::Matrix<double, 10, 9> jac = jacobian(alpha) * t;
    const Eigen::Matrix<double, 9, 9> jtj = jac.transpose() * jac;
    const Vec9 g = jac.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 30; ++tries) {
      Eigen::Matrix<double, 9, 9> damped = jtj;
      damped.diagonal().array() += mu;
      const Vec9 trial_beta = beta + damped.ldlt().solve(-g);
      const Vec10 trial = t * trial_beta;
      const Vec10 r_trial = residual(trial);
      const double c_trial = r_trial.squaredNorm();
      if (std::isfinite(c_trial) && c_trial < cost) {
        beta = trial_beta;
        alpha = trial;
        r = r_trial;
        cost = c_trial;
        mu = std::max(mu / 3.0, 1e-15);
        improved = true;
        break;
      }
      mu *= 4.0;
    }
    if (!improved) break;
  }
  return max_entry(r);
}

void canonicalize(Vec10& alpha) {
  constexpr std::array<std::array<int, 2>, 4> groups{{{0, 1}, {1, 3}, {3, 6}, {6, 10}}};
  for (const auto& [lo, hi] : groups) {
    for (int i = lo; i < hi; ++i) {
      if (std::abs(alpha[i]) > 1e-14) {
        if (alpha[i] < 0) alpha.segment(lo, hi - lo) *= -1.0;
        break;
      }
    }
  }
}

}  // namespace

bool TelescopeCoeffs::valid() const noexcept {
  return std::all_of(alpha.begin(), alpha.end(), [](double v) { return std::isfinite(v); }) && alpha[0] != 0.0;
}

TelescopeCoeffs solve_telescope_coefficients(const TelescopeOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> dist(-options.box, options.box);

  std::vector<Vec10> found;
  bool accepted = false;
  TelescopeCoeffs result;
  Vec10 best = Vec10::Zero();
  double best_residual = std::numeric_limits<double>::infinity();

  for (int s = 0; s < options.starts; ++s) {
    Vec10 alpha;
    for (int i = 0; i < 10; ++i) alpha[i] = dist(rng);
    const double res = damped_newton(alpha, options.max_iterations, options.accept_residual * 1e-3);
    if (!(res < options.fail_residual) || alpha[0] == 0.0) {
      if (res < best_residual && alpha[0] != 0.0) {
        best_residual = res;
        best = alpha;
      }
      continue;
    }
    canonicalize(alpha);
    const bool seen = std::any_of(found.begin(), found.end(),
                                  [&](const Vec10& other) { return max_entry(other - alpha) < 1e-6; });
    if (!seen) found.push_back(alpha);
    if (res < best_residual) {
      best_residual = res;
      best = alpha;
    }
    if (!accepted && res < options.accept_residual) {
      accepted = true;
      for (int i = 0; i < 10; ++i) result.alpha[static_cast<std::size_t>(i)] = alpha[i];
      result.residual = res;
    }
  }

  if (!accepted) {
    if (!(best_residual < options.fail_residual)) throw SolverFailure(best_residual);
    canonicalize(best);
    for (int i = 0; i < 10; ++i) result.alpha[static_cast<std::size_t>(i)] = best[i];
    result.residual = best_residual;
  }
  result.distinct_solutions = static_cast<int>(found.size());
  return result;
}

const TelescopeCoeffs& telescope_coefficients() {
  static const TelescopeCoeffs coeffs = solve_telescope_coefficients();
  return coeffs;
}

namespace {

struct QuadParts {
  double p_new;   // P(f3, f2, f1)
  double p_old;   // P(f2, f1, f0)
  double remainder;  // (a7 f3 + a8 f2 + a9 f1 + a10 f0)^2
};

QuadParts scalar_parts(const TelescopeCoeffs& c, double f3, double f2, double f1, double f0) {
  auto p = [&](double x, double y, double z) {
    const double t1 = c.a(1) * x;
    const double t2 = c.a(2) * x + c.a(3) * y;
    const double t3 = c.a(4) * x + c.a(5) * y + c.a(6) * z;
    return t1 * t1 + t2 * t2 + t3 * t3;
  };
  const double q = c.a(7) * f3 + c.a(8) * f2 + c.a(9) * f1 + c.a(10) * f0;
  return {p(f3, f2, f1), p(f2, f1, f0), q * q};
}

double stencil(double f3, double f2, double f1, double f0) {
  return 11.0 / 6.0 * f3 - 3.0 * f2 + 1.5 * f1 - f0 / 3.0;
}

}  // namespace

double telescope_identity_defect(const TelescopeCoeffs& c, double f3, double f2, double f1, double f0) {
  const auto parts = scalar_parts(c, f3, f2, f1, f0);
  const double lhs = stencil(f3, f2, f1, f0) * (2.0 * f3 - f2);
  return lhs - (parts.p_new - parts.p_old + parts.remainder);
}

double TelescopeVerification::max_residual() const {
  return std::max({scalar_residual, field_residual, split_residual, std::max(0.0, -combined_slack)});
}

TelescopeVerification verify_telescope_report(const TelescopeCoeffs& c, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_telescope: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  TelescopeVerification out;
  out.combined_slack = std::numeric_limits<double>::infinity();

  for (int t = 0; t < trials; ++t) {
    const double f3 = dist(rng), f2 = dist(rng), f1 = dist(rng), f0 = dist(rng);
    const double scale = f3 * f3 + f2 * f2 + f1 * f1 + f0 * f0;
    out.scalar_residual = std::max(out.scalar_residual, std::abs(telescope_identity_defect(c, f3, f2, f1, f0)) / scale);

    const double split = 2.0 / 3.0 * (f3 - f2) + 7.0 / 6.0 * (f3 - 2.0 * f2 + f1) + 1.0 / 3.0 * (f1 - f0);
    const double abs_scale = std::abs(f3) + std::abs(f2) + std::abs(f1) + std::abs(f0);
    out.split_residual = std::max(out.split_residual, std::abs(stencil(f3, f2, f1, f0) - split) / abs_scale);

    // Combined lower bound for the test vector 3 f3 - 2 f2.
    const auto parts = scalar_parts(c, f3, f2, f1, f0);
    const double d32 = f3 - f2, d21 = f2 - f1, d10 = f1 - f0, dd = f3 - 2.0 * f2 + f1;
    const double lhs = stencil(f3, f2, f1, f0) * (3.0 * f3 - 2.0 * f2);
    const double rhs = parts.p_new - parts.p_old + 13.0 / 12.0 * d32 * d32 - 7.0 / 12.0 * d21 * d21 -
                       d10 * d10 / 6.0 + 7.0 / 12.0 * dd * dd;
    out.combined_slack = std::min(out.combined_slack, (lhs - rhs) / scale);
  }

  // Inner-product form on small random grid functions.
  const Grid grid(8);
  auto random_field = [&] {
    std::vector<double> v(grid.size());
    for (auto& x : v) x = dist(rng);
    return ScalarField::from_physical(grid, std::move(v));
  };
  const int field_trials = std::max(1, trials / 10);
  for (int t = 0; t < field_trials; ++t) {
    const ScalarField f3 = random_field(), f2 = random_field(), f1 = random_field(), f0 = random_field();
    ScalarField s = 11.0 / 6.0 * f3 - 3.0 * f2;
    s.add_scaled(1.5, f1).add_scaled(-1.0 / 3.0, f0);
    const double lhs = inner_product(s, 2.0 * f3 - f2);

    auto sq = [](const ScalarField& f) { return inner_product(f, f); };
    auto p = [&](const ScalarField& x, const ScalarField& y, const ScalarField& z) {
      ScalarField t3 = c.a(4) * x + c.a(5) * y;
      t3.add_scaled(c.a(6), z);
      return c.a(1) * c.a(1) * sq(x) + sq(c.a(2) * x + c.a(3) * y) + sq(t3);
    };
    ScalarField q = c.a(7) * f3 + c.a(8) * f2;
    q.add_scaled(c.a(9), f1).add_scaled(c.a(10), f0);
    const double rhs = p(f3, f2, f1) - p(f2, f1, f0) + sq(q);
    const double scale = sq(f3) + sq(f2) + sq(f1) + sq(f0);
    out.field_residual = std::max(out.field_residual, std::abs(lhs - rhs) / scale);
  }
  return out;
}

double verify_telescope(const TelescopeCoeffs& c, int trials) { return verify_telescope_report(c, trials).max_residual(); }

}  // namespace bdf3ns
