#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace btwist {

// Value and first two derivatives of the wall radius at one instant.
struct RadiusJet {
  double r = 0.0;
  double dr = 0.0;
  double ddr = 0.0;

  // (R^2)'' = 2 (R'^2 + R R'')
  double sq_ddr() const { return 2.0 * (dr * dr + r * ddr); }
};

// 1-periodic radius R(t) given by a finite Fourier series
//   R(t) = mean + sum_k a_k cos(2 pi k t) + b_k sin(2 pi k t).
// The representation is restricted to finite series so that sup-norms of the
// first two derivatives can be certified by dense sampling plus refinement.
class RadiusProfile {
 public:
  // harmonics[k-1] = {a_k, b_k}
  RadiusProfile(double mean, std::vector<std::array<double, 2>> harmonics);

  RadiusJet at(double t) const;

  double mean() const { return mean_; }
  const std::vector<std::array<double, 2>>& harmonics() const { return harmonics_; }
  bool is_constant() const;

  // New profile with every Fourier coefficient (including the mean) scaled.
  RadiusProfile scaled(double factor) const;

 private:
  double mean_;
  std::vector<std::array<double, 2>> harmonics_;
};

// Sup-norms and max location over one period.
struct ProfileNorms {
  double r_min = 0.0;     // min R
  double r_max = 0.0;     // max R
  double d1_norm = 0.0;   // sup |R'|
  double d2_norm = 0.0;   // sup |R''|
  double d2_sq_norm = 0.0;  // sup |(R^2)''|
  double t_bar = 0.0;     // argmax of R in [0,1), smallest on ties
  double kappa = 0.0;     // -R''(t_bar), unadjusted candidate for kappa_R
};

// Dense grid scan (grid_points >= 1024) followed by golden-section refinement
// on the bracketing cell. Throws NonPositiveRadius if min sampled R <= 0.
ProfileNorms compute_norms(const RadiusProfile& profile, std::size_t grid_points = std::size_t(1) << 16);

// sigma_0 = Rmin/||R'||, sigma_B = min(Rmin/(2||R'||),
//   2 sqrt(1+sqrt(1-eps^2)) Rmin / sqrt(||(R^2)''||)),
// each term +inf when its denominator vanishes. Requires eps in (0,1).
std::pair<double, double> compute_sigmas(const ProfileNorms& norms, double epsilon);

// Which stationary point of R supplies kappa_R. global_max keeps the
// criterion denominator 2(Rmin+Rmax); critical_point relaxes the max
// condition to R'(tbar)=0 and switches the denominator to 4 Rmin.
enum class KappaMode { global_max, critical_point };

struct ClassReport {
  double sigma0 = 0.0;          // +inf allowed
  double sigmaB = 0.0;          // +inf allowed
  double epsilon = 0.5;
  double kappa = 0.0;           // strict-inequality adjusted kappa_R
  double kappa_location = 0.0;  // t where it is attained
  bool in_R0 = false;
  bool in_RB = false;
  bool in_R0_tilde = false;
  bool in_RB_tilde = false;
  double inf_F = 0.0;           // inf of F over (1, sigma-1); sigma_B scan when in_RB, else sigma_0
  double inf_F_location = 0.0;
  double c_max = 0.0;           // eps Rmin^2 / sigma_B (0 when sigma_B = +inf)
  KappaMode mode = KappaMode::global_max;
};

// Membership in the classes R_0 / R_B and their tilde refinements.
// omega_grid is the scan resolution for inf F (>= 256).
ClassReport classify(const RadiusProfile& profile, double epsilon = 0.5,
                     std::size_t omega_grid = 8192, KappaMode mode = KappaMode::global_max);

}  // namespace btwist
