#pragma once

#include <functional>
#include <vector>

#include "core/geometry.hpp"
#include "core/profile.hpp"

namespace andreev {

enum class SpectrumMethod { BohrSommerfeld, HardWall, Direct };

struct Level {
    int k = 0;            // quantization integer
    double energy = 0.0;
    int branch_sign = +1; // +phi or -phi family
    double residual = 0.0;
};

struct SpectrumResult {
    std::vector<Level> levels; // sorted ascending in energy
    SpectrumMethod method = SpectrumMethod::BohrSommerfeld;
    double h = 0.0;
    double phi = 0.0;
};

struct WidthEstimate {
    double energy = 0.0;
    double theta = 0.0;          // barrier exponent Θ(E_k)
    double h_prime = 0.0;        // α h
    double bare_exponent = 0.0;  // -2 Θ / h'
    double prefactor = 0.0;      // local level spacing / 2π
    double gamma_estimate = 0.0; // prefactor * exp(bare_exponent)
};

struct SpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quasiparticle condition g(E)/h - 2 arccos(E/Δ0) = ±φ + 2πk on a window,
// hard-wall phase g(E) = 2L(sqrt(μ0+E) - sqrt(μ0-E)).  Dense scan (NE points)
// + bisection per bracketed crossing; the condition is strictly increasing in
// E so every root is simple and none can hide between scan points closer than
// the level spacing.
SpectrumResult hard_wall_levels(double delta0, double mu0, double phi, double L,
                                double h, std::pair<double, double> window,
                                double tol_root = 1e-12, int scan_points = 2000);

// Same condition with g(E) = S+(E) - S-(E) from the action integrals.
SpectrumResult bohr_sommerfeld_levels(const Profile& p, double h,
                                      std::pair<double, double> window,
                                      double tol_root = 1e-12,
                                      double tol_quad = 1e-12,
                                      int scan_points = 2000);

// dE_k/dφ by centered difference.  Levels at φ±dφ are matched to the center
// level by nearest energy, not by (k, branch) label: at symmetry points the
// labels swap families while the energies move continuously.
struct Supercurrent {
    Level level;
    double dE_dphi = 0.0;
    bool tracked = true; // false when the nearest-energy match was ambiguous
};
std::vector<Supercurrent> supercurrent(const Profile& p, double h,
                                       std::pair<double, double> window,
                                       double dphi = 1e-3);

// Width estimate at a quantized level: Γ = pref · exp(-2Θ/(αh)); the local
// spacing comes from the derivative of the quantization phase, 2π/y'(E).
WidthEstimate width_estimate(const Profile& p, double E_k, double h);

// shared root machinery (exposed for the hard-wall oracle test)
// y(E) = g(E)/h - 2 arccos(E/delta0); roots of y = b*phi + 2*pi*k
std::vector<Level> solve_condition(const std::function<double(double)>& g,
                                   double delta0, double phi, double h,
                                   std::pair<double, double> window,
                                   double tol_root, int scan_points);

} // namespace andreev
