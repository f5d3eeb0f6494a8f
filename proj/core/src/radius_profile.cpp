#include "btwist/radius_profile.hpp"

#include <cmath>
#include <limits>

#include "btwist/converse_kam.hpp"
#include "btwist/errors.hpp"

namespace btwist {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kGolden = 0.61803398874989484820;  // (sqrt(5)-1)/2
constexpr double kStrictKappa = 1.0 - 1e-6;

// Golden-section maximization of g on [lo, hi]; returns (argmax, max).
template <class F>
std::pair<double, double> golden_max(const F& g, double lo, double hi, double tol = 1e-13) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = g(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, g(x)};
}

double wrap01(double t) {
  t -= std::floor(t);
  if (t >= 1.0 || 1.0 - t < 1e-12) t = 0.0;
  return t;
}

}  // namespace

RadiusProfile::RadiusProfile(double mean, std::vector<std::array<double, 2>> harmonics)
    : mean_(mean), harmonics_(std::move(harmonics)) {}

RadiusJet RadiusProfile::at(double t) const {
  RadiusJet j;
  j.r = mean_;
  for (std::size_t k = 1; k <= harmonics_.size(); ++k) {
    const double w = kTwoPi * static_cast<double>(k);
    const double ph = w * t;
    const double cs = std::cos(ph), sn = std::sin(ph);
    const double a = harmonics_[k - 1][0], b = harmonics_[k - 1][1];
    j.r += a * cs + b * sn;
    j.dr += w * (-a * sn + b * cs);
    j.ddr += w * w * (-a * cs - b * sn);
  }
  return j;
}

bool RadiusProfile::is_constant() const {
  for (const auto& h : harmonics_)
    if (h[0] != 0.0 || h[1] != 0.0) return false;
  return true;
}

RadiusProfile RadiusProfile::scaled(double factor) const {
  auto h = harmonics_;
  for (auto& c : h) {
    c[0] *= factor;
    c[1] *= factor;
  }
  return RadiusProfile(mean_ * factor, std::move(h));
}

ProfileNorms compute_norms(const RadiusProfile& profile, std::size_t grid_points) {
  if (grid_points < 1024)
    throw Error(ErrorKind::InvalidArgument, "compute_norms requires grid_points >= 1024");

  const std::size_t n = grid_points;
  const double h = 1.0 / static_cast<double>(n);

  // One pass over the grid collecting the bracketing index per extremum.
  struct Best {
    double v = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
  };
  Best rmax, rmin, d1, d2, d2sq;
  double min_r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const RadiusJet j = profile.at(static_cast<double>(i) * h);
    min_r = std::min(min_r, j.r);
    auto upd = [i](Best& b, double v) {
      if (v > b.v) {
        b.v = v;
        b.i = i;
      }
    };
    upd(rmax, j.r);
    upd(rmin, -j.r);
    upd(d1, std::abs(j.dr));
    upd(d2, std::abs(j.ddr));
    upd(d2sq, std::abs(j.sq_ddr()));
  }
  if (min_r <= 0.0)
    throw Error(ErrorKind::NonPositiveRadius, "profile attains a non-positive radius");

  auto refine = [&](const Best& b, auto&& g) {
    const double t = static_cast<double>(b.i) * h;
    return golden_max(g, t - h, t + h);
  };

  ProfileNorms out;
  {
    auto [t, v] = refine(rmax, [&](double t) { return profile.at(t).r; });
    out.r_max = v;
    out.t_bar = wrap01(t);
  }
  {
    auto [t, v] = refine(rmin, [&](double t) { return -profile.at(t).r; });
    (void)t;
    out.r_min = -v;
  }
  {
    auto [t, v] = refine(d1, [&](double t) { return std::abs(profile.at(t).dr); });
    (void)t;
    out.d1_norm = v;
  }
  {
    auto [t, v] = refine(d2, [&](double t) { return std::abs(profile.at(t).ddr); });
    (void)t;
    out.d2_norm = v;
  }
  {
    auto [t, v] = refine(d2sq, [&](double t) { return std::abs(profile.at(t).sq_ddr()); });
    (void)t;
    out.d2_sq_norm = v;
  }
  if (out.r_min <= 0.0)
    throw Error(ErrorKind::NonPositiveRadius, "refined minimum radius is non-positive");
  out.kappa = -profile.at(out.t_bar).ddr;
  return out;
}

std::pair<double, double> compute_sigmas(const ProfileNorms& norms, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorKind::OutOfRange, "epsilon must lie in (0,1)");
  const double inf = std::numeric_limits<double>::infinity();
  const double sigma0 = norms.d1_norm > 0.0 ? norms.r_min / norms.d1_norm : inf;
  const double term1 = norms.d1_norm > 0.0 ? norms.r_min / (2.0 * norms.d1_norm) : inf;
  const double term2 =
      norms.d2_sq_norm > 0.0
          ? 2.0 * std::sqrt(1.0 + std::sqrt(1.0 - epsilon * epsilon)) * norms.r_min /
                std::sqrt(norms.d2_sq_norm)
          : inf;
  return {sigma0, std::min(term1, term2)};
}

namespace {

// kappa candidate in critical-point mode: the most concave stationary point
// of R, located by sign changes of R' on a dense grid plus bisection.
std::pair<double, double> critical_point_kappa(const RadiusProfile& profile, std::size_t n) {
  double best_kappa = -std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  const double h = 1.0 / static_cast<double>(n);
  double prev = profile.at(0.0).dr;
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = static_cast<double>(i) * h;
    const double cur = profile.at(t).dr;
    if ((prev <= 0.0 && cur > 0.0) || (prev >= 0.0 && cur < 0.0) || cur == 0.0) {
      double a = t - h, b = t;
      for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = profile.at(m).dr;
        if ((fm > 0.0) == (prev > 0.0))
          a = m;
        else
          b = m;
      }
      const double tc = wrap01(0.5 * (a + b));
      const double k = -profile.at(tc).ddr;
      if (k > best_kappa) {
        best_kappa = k;
        best_t = tc;
      }
    }
    prev = cur;
  }
  if (!std::isfinite(best_kappa)) return {0.0, 0.0};  // constant profile
  return {best_kappa, best_t};
}

}  // namespace

ClassReport classify(const RadiusProfile& profile, double epsilon, std::size_t omega_grid,
                     KappaMode mode) {
  if (omega_grid < 256)
    throw Error(ErrorKind::InvalidArgument, "classify requires omega_grid >= 256");

  const ProfileNorms norms = compute_norms(profile);
  const auto [sigma0, sigmaB] = compute_sigmas(norms, epsilon);

  ClassReport rep;
  rep.sigma0 = sigma0;
  rep.sigmaB = sigmaB;
  rep.epsilon = epsilon;
  rep.mode = mode;
  rep.in_R0 = sigma0 > 2.0;
  rep.in_RB = sigmaB > 2.0;
  rep.c_max = std::isinf(sigmaB) ? 0.0 : epsilon * norms.r_min * norms.r_min / sigmaB;

  if (mode == KappaMode::global_max) {
    rep.kappa = norms.kappa * kStrictKappa;
    rep.kappa_location = norms.t_bar;
  } else {
    auto [k, t] = critical_point_kappa(profile, 1 << 16);
    rep.kappa = k * kStrictKappa;
    rep.kappa_location = t;
  }

  auto inf_over = [&](double sigma) {
    return inf_threshold_F(norms, sigma, omega_grid, mode);
  };

  const bool kappa_ok = rep.kappa > 0.0;
  double infF0 = std::numeric_limits<double>::infinity(), infF0_loc = 0.0;
  double infFB = std::numeric_limits<double>::infinity(), infFB_loc = 0.0;
  if (rep.in_R0) {
    auto r = inf_over(sigma0);
    infF0 = r.first;
    infF0_loc = r.second;
  }
  if (rep.in_RB) {
    auto r = inf_over(sigmaB);
    infFB = r.first;
    infFB_loc = r.second;
  }
  rep.in_R0_tilde = rep.in_R0 && kappa_ok && rep.kappa > infF0;
  rep.in_RB_tilde = rep.in_RB && kappa_ok && rep.kappa > infFB;

  if (rep.in_RB) {
    rep.inf_F = infFB;
    rep.inf_F_location = infFB_loc;
  } else {
    rep.inf_F = infF0;
    rep.inf_F_location = infF0_loc;
  }
  return rep;
}

}  // namespace btwist
