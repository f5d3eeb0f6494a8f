#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "btwist/radius_profile.hpp"

namespace btwist {

// Value and all first/second partials of a generating function at (t0, t1).
struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d11 = 0.0;
  double d12 = 0.0;
  double d22 = 0.0;
};

// Band tau_min < t1 - t0 < tau_max on which a generating function is used.
struct StripSpec {
  double tau_min = 0.0;
  double tau_max = 0.0;
};

// Common interface for strip-restricted and globally extended generating
// functions. jet() must reject arguments outside the admissible band.
struct TwistGenerator {
  virtual ~TwistGenerator() = default;
  virtual Jet2 jet(double t0, double t1) const = 0;
  virtual StripSpec strip() const = 0;
};

// Closed-form jet of h_0(t0,t1) = (R0+R1)^2 / (2 tau). Requires tau > 0.
Jet2 h0_jet(const RadiusProfile& profile, double t0, double t1);

// Closed-form jet of
//   h_c = (R0^2 + R1^2 + 2 sqrt(R0^2 R1^2 - c^2 tau^2)) / (2 tau)
//       + c arctan(c tau / sqrt(R0^2 R1^2 - c^2 tau^2)).
// Requires tau > 0 and c^2 tau^2 < R0^2 R1^2 (DiscriminantNonPositive
// otherwise). Reduces to h0_jet when c = 0.
Jet2 hc_jet(const RadiusProfile& profile, double c, double t0, double t1);

// Generating function of the reduced map on a validity strip. c = 0 selects
// the Fermi-Ulam function h_0 (band bounded by sigma_0), c > 0 the breathing
// billiard function h_c (band bounded by sigma_B for the given epsilon).
class GeneratingFunction final : public TwistGenerator {
 public:
  // Default strip (1e-3, min(sigma, 1e6)).
  GeneratingFunction(RadiusProfile profile, double c, double epsilon = 0.5);
  GeneratingFunction(RadiusProfile profile, double c, StripSpec strip, double epsilon = 0.5);

  // Strip-checked evaluation: the strip is open, with margin 1e-9;
  // evaluation at or beyond the boundary raises OutOfStrip.
  Jet2 jet(double t0, double t1) const override;
  StripSpec strip() const override { return strip_; }

  const RadiusProfile& profile() const { return profile_; }
  const ProfileNorms& norms() const { return norms_; }
  double c() const { return c_; }
  double epsilon() const { return epsilon_; }
  // sigma_0 when c = 0, sigma_B when c > 0.
  double sigma() const { return sigma_; }
  // Whether c lies in the small-momentum window (0, eps Rmin^2 / sigma_B).
  bool in_epsilon_window() const { return in_eps_window_; }

 private:
  RadiusProfile profile_;
  double c_;
  double epsilon_;
  ProfileNorms norms_;
  double sigma_;
  StripSpec strip_;
  bool in_eps_window_;
};

struct TwistReport {
  double min_neg_d12 = 0.0;  // minimum of -d12 over the scan grid
  double argmin_t0 = 0.0;
  double argmin_tau = 0.0;
  std::size_t grid = 0;
};

// Scans -d12 over a (t0 mod 1) x tau grid on the generator's strip.
// Throws TwistViolation if the minimum is <= 0.
TwistReport verify_twist(const TwistGenerator& gen, std::size_t grid = 256);

struct ConvergenceReport {
  std::vector<double> c_values;
  // per c: sup over the strip grid of |h_c - h_0| and of each of the five
  // partial differences; sup_c2_distance is the max of all six.
  std::vector<std::array<double, 6>> component_sup;
  std::vector<double> sup_c2_distance;
  double slope = 0.0;  // least-squares slope of log(sup) vs log(c)
};

// Measures the C^2 distance h_c -> h_0 on a strip grid for a list of c
// values inside the epsilon window; c_values must hold >= 4 entries.
ConvergenceReport convergence_probe(const RadiusProfile& profile, StripSpec strip,
                                    std::span<const double> c_values, std::size_t grid = 96,
                                    double epsilon = 0.5);

}  // namespace btwist
