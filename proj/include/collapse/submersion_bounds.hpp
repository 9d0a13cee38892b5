#pragma once

#include <string>
#include <vector>

namespace collapse {

/// Data of a bounded Riemannian submersion at a loop: |A| <= c_a, |T| <= c_t,
/// fiber dimension k, |sec| <= cap_k on the total space, and the loop length ell.
///
/// Admissibility: ell < 2*pi / sqrt(cap_k + 3*c_a^2), strictly -- the transverse
/// homotopy bound has a conjugate-point pole at the boundary. k is capped at 20.
struct SubmersionBoundInput {
    double c_a = 0.0;
    double c_t = 0.0;
    int k = 1;
    double cap_k = 1.0;
    double ell = 0.0;

    /// Throws DomainError naming the violated inequality.
    void validate() const;
    /// The admissible upper limit 2*pi / sqrt(cap_k + 3*c_a^2).
    double ell_limit() const;
};

/// Every constant of the fiber-injectivity machinery, in one place.
///   q_t, q_s_tilde : nullhomotopy derivative bounds (q_t -> 1, q_s_tilde -> 1/2
///                    as ell -> 0)
///   g1, g2         : coefficients of the comparison ODE rho' = g1*ell^2 + g2*ell*rho
///   p_bound        : bound on d/dl rho_l(1) over [0, ell]
///   l_lipschitz    : holonomy Lipschitz constant e^(c_t * ell)
///   c_total        : p_bound + l_lipschitz; multiplies the loop length
struct BoundBreakdown {
    double q_t;
    double q_s_tilde;
    double g1;
    double g2;
    double p_bound;
    double l_lipschitz;
    double c_total;

    std::string to_json() const;
};

/// Two-sided bounds on |(D_v exp_p)(w)| / |w| under -lambda^2 <= sec <= cap_lambda^2:
/// returns ( sin(cap_lambda*v)/(cap_lambda*v), sinh(lambda*v)/(lambda*v) ), each 1 at a
/// zero parameter. Requires v_norm < pi/cap_lambda when cap_lambda > 0.
std::pair<double, double> exp_differential_bounds(double lambda, double cap_lambda,
                                                  double v_norm);

enum class CurvatureRegime { mixed, negative };

/// Derivative bounds (|dH/dt|, |dH/ds|) for the cone nullhomotopy of a loop of
/// length ell_alpha. Mixed regime (-lambda^2 <= sec <= cap_lambda^2) requires
/// ell_alpha < 2*pi/cap_lambda; negative regime (-lambda^2 <= sec <= -cap_lambda^2)
/// requires lambda >= cap_lambda >= 0 and swaps the sin for a sinh.
std::pair<double, double> nullhomotopy_bounds(double lambda, double cap_lambda,
                                              double ell_alpha, CurvatureRegime regime);

/// Variation-of-constants value rho_ell(1) = (g1/g2) * ell * (e^(g2*ell) - 1) of the
/// comparison ODE; the g2 = 0 limit is g1 * ell^2.
double ode_rho_closed_form(double g1, double g2, double ell);

/// Full constant breakdown at the loop. The curvature scales are derived
/// internally: lambda = sqrt(cap_k), cap_lambda = sqrt(cap_k + 3*c_a^2), the
/// horizontal-space curvature window.
BoundBreakdown compute_breakdown(const SubmersionBoundInput& in);

/// Upper bound on the fiber injectivity radius: c_total * inj_m, evaluated at the
/// loop ell = 2 * inj_m. in.ell must equal 2 * inj_m.
double fiber_inj_bound(const SubmersionBoundInput& in, double inj_m);

/// Base-space sectional curvature window (-cap_k, cap_k + 3 * c_a^2).
std::pair<double, double> gray_oneill_interval(double cap_k, double c_a);

/// Fiber volume bound c3 * inj_f * ( sinh(diam_f * sqrt(cap_k_fiber)) /
/// sqrt(cap_k_fiber) )^(k-1); the k = 1 case is exactly c3 * inj_f.
double heintze_karcher_fiber_volume(int k, double cap_k_fiber, double inj_f, double diam_f,
                                    double c3);

/// Default volume constant: 2 for circle fibers (where the bound is an equality),
/// 2 * area of the unit (k-1)-sphere beyond. The higher-k values are a documented
/// placeholder; only k = 1 is pinned by an exact case.
double c3_default(int k);

struct TauRow {
    double ell;
    double p;            // p_bound
    double l_minus_1;    // l_lipschitz - 1
    double c_minus_1;    // c_total - 1
};

/// Correction-term profile over a grid of loop lengths; every column decays to 0
/// with ell.
std::vector<TauRow> tau_profile(double c_a, double c_t, int k, double cap_k,
                                const std::vector<double>& ell_grid);

}  // namespace collapse
