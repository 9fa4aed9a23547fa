#include "swegen/flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swegen {

namespace {

struct Velocity {
    double u = 0.0;
    double v = 0.0;
};

Velocity velocity(const StateTriple& q, double h_dry) noexcept {
    if (q.h < h_dry)
        return {};
    return {q.hu / q.h, q.hv / q.h};
}

FluxTriple central(const FluxTriple& fl, const FluxTriple& fr) noexcept {
    return {0.5 * (fl.f_h + fr.f_h), 0.5 * (fl.f_hu + fr.f_hu), 0.5 * (fl.f_hv + fr.f_hv)};
}

FluxTriple scalar_dissipation(const StateTriple& ql, const StateTriple& qr, double g, double a,
                              double h_dry) noexcept {
    const FluxTriple c = central(physical_flux_x(ql, g, h_dry), physical_flux_x(qr, g, h_dry));
    return {c.f_h - 0.5 * a * (qr.h - ql.h), c.f_hu - 0.5 * a * (qr.hu - ql.hu),
            c.f_hv - 0.5 * a * (qr.hv - ql.hv)};
}

FluxTriple roe_flux_x(const StateTriple& ql, const StateTriple& qr, double g, double h_dry,
                      EntropyFix fix) noexcept {
    const FluxTriple c = central(physical_flux_x(ql, g, h_dry), physical_flux_x(qr, g, h_dry));
    if (ql.h < h_dry && qr.h < h_dry)
        return c;

    const Velocity vl = velocity(ql, h_dry);
    const Velocity vr = velocity(qr, h_dry);
    const double sl = std::sqrt(ql.h);
    const double sr = std::sqrt(qr.h);
    const double u_hat = (sl * vl.u + sr * vr.u) / (sl + sr);
    const double v_hat = (sl * vl.v + sr * vr.v) / (sl + sr);
    const double c_hat = std::sqrt(g * 0.5 * (ql.h + qr.h));

    const double dh = qr.h - ql.h;
    const double dhu = qr.hu - ql.hu;
    const double dhv = qr.hv - ql.hv;

    // Wave strengths on the eigenbasis r1 = (1, u-c, v), r2 = (0, 0, 1),
    // r3 = (1, u+c, v).
    const double a1 = ((u_hat + c_hat) * dh - dhu) / (2.0 * c_hat);
    const double a2 = dhv - v_hat * dh;
    const double a3 = (dhu - (u_hat - c_hat) * dh) / (2.0 * c_hat);

    const double delta = 0.1 * c_hat;
    auto magnitude = [&](double lambda) {
        const double m = std::abs(lambda);
        if (fix == EntropyFix::harten && m < delta)
            return (lambda * lambda + delta * delta) / (2.0 * delta);
        return m;
    };
    const double m1 = magnitude(u_hat - c_hat) * a1;
    const double m2 = magnitude(u_hat) * a2;
    const double m3 = magnitude(u_hat + c_hat) * a3;

    const double d_h = m1 + m3;
    const double d_hu = m1 * (u_hat - c_hat) + m3 * (u_hat + c_hat);
    const double d_hv = (m1 + m3) * v_hat + m2;
    return {c.f_h - 0.5 * d_h, c.f_hu - 0.5 * d_hu, c.f_hv - 0.5 * d_hv};
}

}  // namespace

FluxTriple physical_flux_x(const StateTriple& q, double g, double h_dry) {
    const double pressure = 0.5 * g * q.h * q.h;
    if (q.h < h_dry)
        return {0.0, pressure, 0.0};
    const double u = q.hu / q.h;
    const double v = q.hv / q.h;
    return {q.hu, q.hu * u + pressure, q.hu * v};
}

FluxTriple physical_flux_y(const StateTriple& q, double g, double h_dry) {
    return swap_momenta(physical_flux_x(swap_momenta(q), g, h_dry));
}

FluxTriple physical_flux(const StateTriple& q, double g, Axis axis, double h_dry) {
    return axis == Axis::x ? physical_flux_x(q, g, h_dry) : physical_flux_y(q, g, h_dry);
}

double max_wave_speed(const StateTriple& q, double g, Axis axis, double h_dry) {
    if (q.h < h_dry)
        return 0.0;
    const double normal_momentum = axis == Axis::x ? q.hu : q.hv;
    return std::abs(normal_momentum / q.h) + std::sqrt(g * q.h);
}

FluxTriple rusanov_flux(const StateTriple& ql, const StateTriple& qr, double g, Axis axis,
                        double h_dry) {
    if (axis == Axis::y)
        return swap_momenta(rusanov_flux(swap_momenta(ql), swap_momenta(qr), g, Axis::x, h_dry));
    const double a = std::max(max_wave_speed(ql, g, Axis::x, h_dry),
                              max_wave_speed(qr, g, Axis::x, h_dry));
    return scalar_dissipation(ql, qr, g, a, h_dry);
}

FluxTriple lax_friedrichs_flux(const StateTriple& ql, const StateTriple& qr, double g,
                               double a_global, Axis axis, double h_dry) {
    if (!(a_global > 0.0) && !(ql == qr))
        throw std::invalid_argument("lax_friedrichs_flux: a_global must be positive");
    if (axis == Axis::y)
        return swap_momenta(
            lax_friedrichs_flux(swap_momenta(ql), swap_momenta(qr), g, a_global, Axis::x, h_dry));
    return scalar_dissipation(ql, qr, g, a_global, h_dry);
}

FluxTriple roe_flux(const StateTriple& ql, const StateTriple& qr, double g, Axis axis,
                    double h_dry, EntropyFix fix) {
    if (axis == Axis::y)
        return swap_momenta(roe_flux_x(swap_momenta(ql), swap_momenta(qr), g, h_dry, fix));
    return roe_flux_x(ql, qr, g, h_dry, fix);
}

FluxTriple interface_flux(FluxScheme scheme, const StateTriple& ql, const StateTriple& qr,
                          double g, double a_global, Axis axis, double h_dry) {
    switch (scheme) {
        case FluxScheme::lax_friedrichs:
            return lax_friedrichs_flux(ql, qr, g, a_global, axis, h_dry);
        case FluxScheme::rusanov:
            return rusanov_flux(ql, qr, g, axis, h_dry);
        case FluxScheme::roe:
            return roe_flux(ql, qr, g, axis, h_dry);
    }
    throw std::invalid_argument("unknown flux scheme");
}

DamBreakSolution::DamBreakSolution(double h_l, double h_r, double g) : h_l_(h_l), h_r_(h_r), g_(g) {
    if (!(h_r >= 0.0) || !(h_l > h_r) || !std::isfinite(h_l))
        throw std::invalid_argument("dam break requires h_l > h_r >= 0");
    if (!(g > 0.0))
        throw std::invalid_argument("gravity must be positive");

    const double c_l = std::sqrt(g * h_l);
    if (h_r == 0.0) {
        h_m_ = 0.0;
        u_m_ = 2.0 * c_l;
        front_speed_ = 2.0 * c_l;
        return;
    }

    // Velocity behind the left rarefaction must equal the velocity behind the
    // right-going shock. The mismatch is decreasing in h_m on (h_r, h_l).
    auto mismatch = [&](double hm) {
        const double u_rarefaction = 2.0 * (c_l - std::sqrt(g * hm));
        const double u_shock = (hm - h_r) * std::sqrt(0.5 * g * (hm + h_r) / (hm * h_r));
        return u_rarefaction - u_shock;
    };
    double lo = h_r, hi = h_l;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (mismatch(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    h_m_ = 0.5 * (lo + hi);
    u_m_ = 2.0 * (c_l - std::sqrt(g * h_m_));
    front_speed_ = h_m_ * u_m_ / (h_m_ - h_r);
}

double DamBreakSolution::fan_head_speed() const noexcept { return -std::sqrt(g_ * h_l_); }

double DamBreakSolution::fan_tail_speed() const noexcept {
    return u_m_ - std::sqrt(g_ * h_m_);
}

StateTriple DamBreakSolution::at(double xi) const {
    if (xi <= fan_head_speed())
        return {h_l_, 0.0, 0.0};
    if (xi < fan_tail_speed()) {
        // Inside the fan u + 2c is constant and u - c = xi.
        const double c = (2.0 * std::sqrt(g_ * h_l_) - xi) / 3.0;
        const double h = c * c / g_;
        return {h, h * (xi + c), 0.0};
    }
    if (xi < front_speed_)
        return {h_m_, h_m_ * u_m_, 0.0};
    return {h_r_, 0.0, 0.0};
}

StateTriple exact_dam_break(double h_l, double h_r, double g, double x_over_t) {
    return DamBreakSolution(h_l, h_r, g).at(x_over_t);
}

}  // namespace swegen
