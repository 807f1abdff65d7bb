#ifndef SIXV_ASYMPTOTICS_HPP
#define SIXV_ASYMPTOTICS_HPP

#include <utility>

#include "sixv/extreal.hpp"
#include "sixv/weights.hpp"

namespace sixv {

/// Closed-form constants of the ferroelectric asymptotics
/// Z_n ~ C G^n F^{n^2}: C = 1 - e^{-4 gamma}, G = e^{gamma-t},
/// F = sinh(t+gamma).
struct AsymptoticConstants {
  ExtReal C, G, F;
};

AsymptoticConstants constants(const FerroParams& p);

/// Partial-product estimator C_hat_n = Z_n / (G^n F^{n^2})
/// ( = prod_{k<n} h_k/h_k^Q ).
ExtReal c_hat(const FerroParams& p, int n);

/// Finite-difference residuals at fixed gamma, second-order central stencils:
///  r1: |tau_n tau_n'' - tau_n'^2 - tau_{n+1} tau_{n-1}| / |tau_{n+1} tau_{n-1}|
///  r2: |(ln tau_n)'' - 4 h_n/h_{n-1}| / |4 h_n/h_{n-1}|
std::pair<ExtReal, ExtReal> toda_residuals(const FerroParams& p, int n, const ExtReal& step);

/// G0 = sinh(2 gamma)/sinh(t+gamma) and G1 = G/G0 > 1;
/// ground-state weight is F^{n^2} G0^n and Z_n / w(gs) trends to G1^n.
struct GroundStateConstants {
  ExtReal G0, G1;
};

GroundStateConstants ground_state_constants(const FerroParams& p);
ExtReal ground_state_ratio(const FerroParams& p);  ///< G1

/// Free energy on the line (a+b)/c = alpha: (alpha+beta)/2 on the
/// ferroelectric side (beta >= 1).
ExtReal F0_ferro(const LineParams& lp);

/// Disordered side (0 <= beta < 1): (alpha+beta) g(t,gamma) / 2 at the
/// inverted parameters.
ExtReal F0_disordered(const LineParams& lp);

/// g(t,gamma) = pi sin(t-gamma) / [ (pi-2 gamma) sin(pi (t-gamma)/(pi-2 gamma)) ].
ExtReal g_factor(const ExtReal& t, const ExtReal& gamma);

/// Piecewise F0 over the whole line, using the a<->b symmetry F0(beta) =
/// F0(|beta|) below zero and the ferroelectric formula for |beta| >= 1.
ExtReal F0_on_line(const ExtReal& alpha, const ExtReal& beta);

/// |Delta(alpha,beta) - 1 - 4(beta-1)/(alpha^2-1)| / (beta-1)^2 with
/// Delta = (alpha^2+beta^2-2)/(alpha^2-beta^2); stays bounded as beta -> 1.
ExtReal delta_expansion_check(const LineParams& lp);

/// Disordered-phase exponent kappa = 1/12 - 2 gamma^2 / (3 pi (pi - 2 gamma)).
ExtReal kappa(const ExtReal& gamma);

}  // namespace sixv

#endif
