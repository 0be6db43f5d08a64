#include "andreev.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>

#include "core/geometry.hpp"
#include "core/profile.hpp"
#include "core/shooting.hpp"
#include "core/solver.hpp"
#include "core/spectrum.hpp"
#include "core/weber.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

// Exceptions map onto the C status codes; anything unrecognized is treated
// as a convergence failure rather than crossing the ABI as an exception.
template <class F>
abdg_status guarded(F&& f) {
    try {
        return f();
    } catch (const andreev::ProfileError& e) {
        set_error(e.what());
        return ABDG_INVALID_ARGUMENT;
    } catch (const andreev::WeberDomainError& e) {
        set_error(e.what());
        return ABDG_DOMAIN_ERROR;
    } catch (const andreev::GeometryError& e) {
        set_error(e.what());
        return ABDG_DOMAIN_ERROR;
    } catch (const andreev::SpectrumError& e) {
        set_error(e.what());
        return ABDG_INVALID_ARGUMENT;
    } catch (const andreev::SolverError& e) {
        set_error(e.what());
        return ABDG_NO_CONVERGENCE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return ABDG_INVALID_ARGUMENT;
    } catch (const std::bad_alloc& e) {
        set_error(e.what());
        return ABDG_NO_CONVERGENCE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ABDG_NO_CONVERGENCE;
    }
}

abdg_status require(bool cond, const char* msg) {
    if (!cond) {
        set_error(msg);
        return ABDG_INVALID_ARGUMENT;
    }
    return ABDG_OK;
}

abdg_level to_level(const andreev::Level& l) {
    return abdg_level{l.k, l.energy, l.branch_sign, l.residual};
}

abdg_resonance to_resonance(const andreev::Resonance& r) {
    abdg_resonance out{};
    out.energy_re = r.energy.real();
    out.energy_im = r.energy.imag();
    out.gamma = r.gamma;
    out.theta_used = r.theta_used;
    out.stability = r.stability;
    out.residual = r.residual;
    out.escaped = r.escaped ? 1 : 0;
    out.below_floor = r.below_floor ? 1 : 0;
    out.converged = r.converged ? 1 : 0;
    return out;
}

} // namespace

struct abdg_profile {
    andreev::Profile impl;
};

extern "C" {

const char* abdg_last_error(void) { return g_last_error.c_str(); }

abdg_status abdg_profile_create(double delta0, double mu0, double phi,
                                double x1, double x2, double lead_half_length,
                                abdg_ramp ramp, abdg_profile** out) {
    if (abdg_status s = require(out != nullptr, "out handle is null")) return s;
    if (abdg_status s = require(ramp == ABDG_RAMP_QUINTIC || ramp == ABDG_RAMP_LINEAR,
                                "unknown ramp shape"))
        return s;
    return guarded([&] {
        auto shape = (ramp == ABDG_RAMP_LINEAR) ? andreev::RampShape::Linear
                                                : andreev::RampShape::QuinticSmoothstep;
        *out = new abdg_profile{
            andreev::Profile(delta0, mu0, phi, x1, x2, lead_half_length, shape)};
        return ABDG_OK;
    });
}

void abdg_profile_destroy(abdg_profile* p) { delete p; }

abdg_status abdg_profile_eval(const abdg_profile* p, double x, double* delta,
                              double* mu, double* phase) {
    if (abdg_status s = require(p != nullptr, "profile handle is null")) return s;
    if (delta) *delta = p->impl.delta(x);
    if (mu) *mu = p->impl.mu(x);
    if (phase) *phase = p->impl.phase(x);
    return ABDG_OK;
}

abdg_status abdg_classical_geometry(const abdg_profile* p, double energy,
                                    double tol_root, double tol_quad,
                                    abdg_geometry* out) {
    if (abdg_status s = require(p && out, "null argument")) return s;
    return guarded([&] {
        andreev::ClassicalGeometry g =
            andreev::classical_geometry(p->impl, energy, tol_root, tol_quad);
        out->energy = g.energy;
        out->x0 = g.x0;
        out->xi0 = g.xi0;
        out->alpha = g.alpha;
        out->beta = g.beta;
        out->action_plus = g.action_plus;
        out->action_minus = g.action_minus;
        out->barrier_finite = g.barrier_finite;
        out->barrier_tail_rate = g.barrier_tail_rate;
        out->quad_error = g.quad_error;
        out->quad_converged = g.quad_converged ? 1 : 0;
        return ABDG_OK;
    });
}

abdg_status abdg_weber_d(double nu, double z_re, double z_im, double* out_re,
                         double* out_im, int* precision_loss) {
    if (abdg_status s = require(out_re && out_im, "null output")) return s;
    return guarded([&] {
        andreev::WeberValue v =
            andreev::parabolic_cylinder_D(nu, andreev::cplx(z_re, z_im));
        *out_re = v.value.real();
        *out_im = v.value.imag();
        if (precision_loss) *precision_loss = v.precision_loss ? 1 : 0;
        return ABDG_OK;
    });
}

abdg_status abdg_weber_d_prime(double nu, double z_re, double z_im,
                               double* out_re, double* out_im,
                               int* precision_loss) {
    if (abdg_status s = require(out_re && out_im, "null output")) return s;
    return guarded([&] {
        andreev::WeberValue v =
            andreev::parabolic_cylinder_D_prime(nu, andreev::cplx(z_re, z_im));
        *out_re = v.value.real();
        *out_im = v.value.imag();
        if (precision_loss) *precision_loss = v.precision_loss ? 1 : 0;
        return ABDG_OK;
    });
}

abdg_status abdg_weber_index(const abdg_profile* p, double energy, double h,
                             double* nu) {
    if (abdg_status s = require(p && nu, "null argument")) return s;
    return guarded([&] {
        andreev::LocalSlope ls = andreev::local_slope(p->impl, energy);
        *nu = andreev::weber_index(energy, ls.xi0, ls.alpha, h).nu;
        return ABDG_OK;
    });
}

namespace {

abdg_status emit_levels(const std::vector<andreev::Level>& levels,
                        abdg_level* buf, size_t capacity, size_t* count) {
    if (abdg_status s = require(count != nullptr, "count is null")) return s;
    *count = levels.size();
    size_t n = std::min(levels.size(), capacity);
    if (abdg_status s = require(buf != nullptr || n == 0, "buffer is null"))
        return s;
    for (size_t i = 0; i < n; ++i) buf[i] = to_level(levels[i]);
    if (levels.size() > capacity) {
        set_error("level buffer too small");
        return ABDG_BUFFER_TOO_SMALL;
    }
    return ABDG_OK;
}

} // namespace

abdg_status abdg_hard_wall_levels(double delta0, double mu0, double phi,
                                  double length, double h, double window_lo,
                                  double window_hi, abdg_level* buf,
                                  size_t capacity, size_t* count) {
    return guarded([&] {
        andreev::SpectrumResult r = andreev::hard_wall_levels(
            delta0, mu0, phi, length, h, {window_lo, window_hi});
        return emit_levels(r.levels, buf, capacity, count);
    });
}

abdg_status abdg_semiclassical_levels(const abdg_profile* p, double h,
                                      double window_lo, double window_hi,
                                      abdg_level* buf, size_t capacity,
                                      size_t* count) {
    if (abdg_status s = require(p != nullptr, "profile handle is null")) return s;
    return guarded([&] {
        andreev::SpectrumResult r = andreev::bohr_sommerfeld_levels(
            p->impl, h, {window_lo, window_hi});
        return emit_levels(r.levels, buf, capacity, count);
    });
}

abdg_status abdg_supercurrent(const abdg_profile* p, double h,
                              double window_lo, double window_hi,
                              abdg_level* buf, double* dE_dphi, int* tracked,
                              size_t capacity, size_t* count) {
    if (abdg_status s = require(p && count, "null argument")) return s;
    return guarded([&] {
        std::vector<andreev::Supercurrent> sc =
            andreev::supercurrent(p->impl, h, {window_lo, window_hi});
        *count = sc.size();
        size_t n = std::min(sc.size(), capacity);
        if (abdg_status s =
                require((buf && dE_dphi && tracked) || n == 0, "buffer is null"))
            return s;
        for (size_t i = 0; i < n; ++i) {
            buf[i] = to_level(sc[i].level);
            dE_dphi[i] = sc[i].dE_dphi;
            tracked[i] = sc[i].tracked ? 1 : 0;
        }
        if (sc.size() > capacity) {
            set_error("level buffer too small");
            return ABDG_BUFFER_TOO_SMALL;
        }
        return ABDG_OK;
    });
}

abdg_status abdg_width_estimate(const abdg_profile* p, double energy, double h,
                                abdg_width* out) {
    if (abdg_status s = require(p && out, "null argument")) return s;
    return guarded([&] {
        andreev::WidthEstimate w = andreev::width_estimate(p->impl, energy, h);
        out->energy = w.energy;
        out->theta = w.theta;
        out->h_prime = w.h_prime;
        out->bare_exponent = w.bare_exponent;
        out->prefactor = w.prefactor;
        out->gamma_estimate = w.gamma_estimate;
        return ABDG_OK;
    });
}

abdg_status abdg_bound_states(const abdg_profile* p, double h, double X, int N,
                              double window_lo, double window_hi,
                              abdg_bound_state* buf, size_t capacity,
                              size_t* count) {
    if (abdg_status s = require(p && count, "null argument")) return s;
    return guarded([&] {
        andreev::DiscretizedOperator op = andreev::discretize(p->impl, h, X, N);
        std::vector<andreev::BoundState> bs =
            andreev::bound_states(op, {window_lo, window_hi});
        *count = bs.size();
        size_t n = std::min(bs.size(), capacity);
        if (abdg_status s = require(buf != nullptr || n == 0, "buffer is null"))
            return s;
        for (size_t i = 0; i < n; ++i)
            buf[i] = abdg_bound_state{bs[i].energy, bs[i].residual,
                                      bs[i].boundary_amplitude};
        if (bs.size() > capacity) {
            set_error("state buffer too small");
            return ABDG_BUFFER_TOO_SMALL;
        }
        return ABDG_OK;
    });
}

abdg_status abdg_resonance_cs(const abdg_profile* p, double h, double X, int N,
                              double theta, double scale_start, double seed,
                              double level_spacing, int with_stability,
                              int richardson, abdg_resonance* out) {
    if (abdg_status s = require(p && out, "null argument")) return s;
    return guarded([&] {
        andreev::Resonance r =
            richardson
                ? andreev::resonance_cs_richardson(p->impl, h, X, N, theta,
                                                   scale_start, seed,
                                                   level_spacing,
                                                   with_stability != 0)
                : andreev::resonance_complex_scaling(p->impl, h, X, N, theta,
                                                     scale_start, seed,
                                                     level_spacing,
                                                     with_stability != 0);
        *out = to_resonance(r);
        return r.converged ? ABDG_OK : ABDG_NO_CONVERGENCE;
    });
}

abdg_status abdg_resonance_shooting(const abdg_profile* p, double h,
                                    double seed_re, double seed_im,
                                    abdg_resonance* out) {
    if (abdg_status s = require(p && out, "null argument")) return s;
    return guarded([&] {
        andreev::Resonance r = andreev::shooting_resonance(
            p->impl, h, andreev::cplx(seed_re, seed_im));
        *out = to_resonance(r);
        return r.converged ? ABDG_OK : ABDG_NO_CONVERGENCE;
    });
}

} // extern "C"
