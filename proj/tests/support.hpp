#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's own matrix helpers.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "optics/core_math.hpp"
#include "optics/ray_optics.hpp"
#include "optics/resonator.hpp"
#include "optics/sysdesc.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

// R in +-[0.05, 5]
inline double signed_radius(Rng& rng) {
    const double r = uniform(rng, 0.05, 5.0);
    return coin(rng) ? r : -r;
}

inline optics::FreeSpace random_space(Rng& rng) { return {uniform(rng, 1.0, 2.0), uniform(rng, 0.0, 1.0)}; }

inline optics::OpticalInterface random_interface(Rng& rng) {
    return coin(rng) ? optics::OpticalInterface::plane() : optics::OpticalInterface::spherical(signed_radius(rng));
}

inline optics::OpticalComponent random_component(Rng& rng) {
    return {random_space(rng), random_interface(rng),
            uniform_int(rng, 0, 3) == 0 ? optics::InterfaceKind::reflected : optics::InterfaceKind::transmitted};
}

// Up to `max_components` components plus a terminal free space.
inline optics::OpticalSystem random_system(Rng& rng, int max_components = 8) {
    optics::OpticalSystem sys;
    const int k = uniform_int(rng, 0, max_components);
    for (int i = 0; i < k; ++i) sys.components.push_back(random_component(rng));
    sys.terminal = random_space(rng);
    return sys;
}

inline optics::Resonator random_resonator(Rng& rng, int max_inner = 3) {
    optics::Resonator res;
    res.left = random_interface(rng);
    const int k = uniform_int(rng, 0, max_inner);
    for (int i = 0; i < k; ++i) res.inner.push_back(random_component(rng));
    res.space = random_space(rng);
    res.right = random_interface(rng);
    return res;
}

// Row-major 2x2, kept separate from optics::Mat2 so the oracle shares no code.
using M2 = std::array<double, 4>;

inline M2 mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

inline M2 from(const optics::Mat2& m) { return {m.a11, m.a12, m.a21, m.a22}; }

inline double frob(const M2& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]); }

inline double rel_diff(const M2& a, const M2& b) {
    const M2 d{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    return frob(d) / std::max(frob(b), 1e-300);
}

inline M2 iterated_power(const M2& m, unsigned n) {
    M2 acc{1, 0, 0, 1};
    for (unsigned i = 0; i < n; ++i) acc = mul(m, acc);
    return acc;
}

// det = 1 and |half-trace| <= max_ht. Built as P * rotation * P^-1 so the
// half-trace is exactly cos(phi).
inline M2 random_unimodular(Rng& rng, double max_ht) {
    const double c = uniform(rng, -max_ht, max_ht);
    const double s = std::sqrt(1.0 - c * c);
    const M2 rot{c, -s, s, c};
    M2 p{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
    double det = p[0] * p[3] - p[1] * p[2];
    while (std::abs(det) < 0.2) {
        p = {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
        det = p[0] * p[3] - p[1] * p[2];
    }
    const M2 inv{p[3] / det, -p[1] / det, -p[2] / det, p[0] / det};
    return mul(mul(p, rot), inv);
}

// Any real det-1 matrix with entries of order one.
inline M2 random_sl2(Rng& rng) {
    double a = uniform(rng, 0.3, 2.0);
    if (coin(rng)) a = -a;
    const double b = uniform(rng, -2, 2);
    const double c = uniform(rng, -2, 2);
    return {a, b, c, (1.0 + b * c) / a};
}

// Ray-transfer matrices written out from the textbook forms, without
// the library's element table.
inline M2 oracle_free_space(double d) { return {1, d, 0, 1}; }

inline M2 oracle_interface(const optics::OpticalInterface& iface, optics::InterfaceKind kind, double n0,
                           double n1) {
    const bool sph = iface.is_spherical();
    if (kind == optics::InterfaceKind::reflected) return {1, 0, sph ? -2.0 / iface.radius : 0.0, 1};
    return {1, 0, sph ? (n0 - n1) / (n1 * iface.radius) : 0.0, n0 / n1};
}

inline M2 oracle_composition(const optics::OpticalSystem& sys) {
    M2 acc{1, 0, 0, 1};
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        const auto& c = sys.components[i];
        const double next_n = i + 1 < sys.components.size() ? sys.components[i + 1].space.n : sys.terminal.n;
        acc = mul(oracle_free_space(c.space.d), acc);
        acc = mul(oracle_interface(c.iface, c.kind, c.space.n, next_n), acc);
    }
    return mul(oracle_free_space(sys.terminal.d), acc);
}

// Fabry-Perot round trip for mirrors of radius R a distance d apart:
// (M P)^2 with P free flight and M a mirror.
inline double fp_half_trace(double d, double r) { return 2.0 * (1.0 - d / r) * (1.0 - d / r) - 1.0; }

inline optics::sysdesc::Document random_document(Rng& rng) {
    using namespace optics::sysdesc;
    auto real = [&]() {
        switch (uniform_int(rng, 0, 3)) {
            case 0: return static_cast<double>(uniform_int(rng, -5, 5));
            case 1: return uniform(rng, -10, 10);
            case 2: return uniform(rng, 0, 1) * std::pow(10.0, uniform_int(rng, -12, 12));
            default: return -uniform(rng, 0, 1) * std::pow(10.0, uniform_int(rng, -300, 300));
        }
    };
    auto space = [&]() { return Directive{optics::FreeSpace{real(), real()}, {}}; };
    auto iface = [&](bool mirror) {
        optics::OpticalInterface i =
            coin(rng) ? optics::OpticalInterface::plane() : optics::OpticalInterface::spherical(real());
        const auto kind = mirror || coin(rng) ? optics::InterfaceKind::reflected : optics::InterfaceKind::transmitted;
        return Directive{InterfaceLine{i, kind}, {}};
    };
    Document doc;
    const int pairs = uniform_int(rng, 0, 5);
    if (coin(rng)) {
        doc.kind = DocumentKind::system;
        for (int i = 0; i < pairs; ++i) {
            doc.items.push_back(space());
            doc.items.push_back(iface(false));
        }
        doc.items.push_back(space());
    } else {
        doc.kind = DocumentKind::resonator;
        doc.items.push_back(iface(true));
        for (int i = 0; i <= pairs; ++i) {
            doc.items.push_back(space());
            doc.items.push_back(iface(i == pairs));
        }
    }
    return doc;
}

}  // namespace testsupport
