#pragma once

// Test-only oracles, kept independent of the library's integration paths:
// adaptive Simpson instead of composite Gauss panels, explicit 2D nesting
// for the kernel reductions, and seeded Monte Carlo for the 3D/6D objects.

#include <Eigen/Core>
#include <cstdint>
#include <functional>

namespace oracle {

/// Adaptive Simpson on [a, b] to absolute tolerance tol.
double adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol,
                     int max_depth = 48);

/// Nested 2D adaptive quadrature of the solid-angle integral
///   r'^2 int_0^{2pi} dphi int_0^pi dtheta sin(theta) P_ell(cos theta)
///                 / (A + B cos theta)^k,
/// the defining reduction of the radial T (k=1) and W (k=2) kernels.
double kernel_oracle(int ell, double lambda, double mu, double r, double r_prime, int k,
                     double tol = 1e-12);

/// Brute-force cancellation functional: inner r-integral to the cutoff R_c
/// first (panel quadrature in r), then the y-integral, in the printed order.
double c_bruteforce(double s, double m, double r_cutoff, double tol = 1e-10);

/// m(s) by plain bisection on the brute-force functional.
double m_of_s_bruteforce(double s, double tol_m = 1e-9);

struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

/// Monte Carlo over the ball |q| < R (uniform sampling).
McEstimate mc_ball(const std::function<double(const Eigen::Vector3d&)>& f, double R,
                   std::int64_t n, std::uint64_t seed);

/// Monte Carlo over R^3 x R^3 with heavy-tailed radial importance sampling
/// (r = tan(pi u / 2) per variable, uniform directions).
McEstimate mc_r6(const std::function<double(const Eigen::Vector3d&, const Eigen::Vector3d&)>& f,
                 std::int64_t n, std::uint64_t seed);

/// Real spherical-sector factors used by the 6D oracles.
double y00();
double y10(const Eigen::Vector3d& p);

}  // namespace oracle
