#include "optics/resonator.hpp"

#include <algorithm>
#include <cmath>

#include "optics/errors.hpp"

namespace optics {

namespace {

void require_valid(const Resonator& res) {
    const ValidationReport report = validate_resonator(res);
    if (!report.passed()) throw InvalidResonator("invalid resonator: " + report.summary());
}

// A refracting surface crossed in the opposite direction presents the opposite
// curvature. A reflecting surface is hit from the same side on both passes.
OpticalInterface reversed(const OpticalInterface& iface, InterfaceKind kind) {
    if (kind == InterfaceKind::transmitted && iface.is_spherical()) {
        return OpticalInterface::spherical(-iface.radius);
    }
    return iface;
}

std::vector<OpticalComponent> one_round_trip(const Resonator& res) {
    const auto& inner = res.inner;
    std::vector<OpticalComponent> trip;
    trip.reserve(2 * inner.size() + 2);

    trip.insert(trip.end(), inner.begin(), inner.end());
    trip.push_back({res.space, res.right, InterfaceKind::reflected});

    // Backward: the medium preceding each interface is the one that followed
    // it on the forward pass.
    FreeSpace medium = res.space;
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
        trip.push_back({medium, reversed(it->iface, it->kind), it->kind});
        medium = it->space;
    }
    trip.push_back({medium, res.left, InterfaceKind::reflected});
    return trip;
}

}  // namespace

std::string_view StabilityVerdict::label() const {
    if (stable) return "stable";
    if (marginal) return "marginal";
    return "unstable";
}

ValidationReport validate_resonator(const Resonator& res) {
    ValidationReport report;
    check_interface(res.left, 0, report);
    for (std::size_t i = 0; i < res.inner.size(); ++i) {
        check_free_space(res.inner[i].space, i + 1, report);
        check_interface(res.inner[i].iface, i + 1, report);
    }
    check_free_space(res.space, res.inner.size() + 1, report);
    check_interface(res.right, res.inner.size() + 1, report);
    return report;
}

OpticalSystem unfold_resonator(const Resonator& res, unsigned round_trips) {
    require_valid(res);
    if (round_trips < 1) throw InvalidResonator("unfold_resonator: need at least one round trip");

    const std::vector<OpticalComponent> trip = one_round_trip(res);
    OpticalSystem sys;
    sys.components.reserve(trip.size() * round_trips);
    for (unsigned i = 0; i < round_trips; ++i) {
        sys.components.insert(sys.components.end(), trip.begin(), trip.end());
    }
    const double n_start = res.inner.empty() ? res.space.n : res.inner.front().space.n;
    sys.terminal = {n_start, 0.0};
    return sys;
}

Mat2 round_trip_matrix(const Resonator& res) { return system_composition(unfold_resonator(res, 1)); }

StabilityVerdict stability(const Resonator& res) {
    const Mat2 m = round_trip_matrix(res);
    StabilityVerdict v;
    v.det = m.det();
    v.half_trace = m.half_trace();
    if (!(std::abs(v.det - 1.0) <= kUnimodularTolerance)) {
        throw NonUnimodular("round-trip determinant differs from 1; half-trace criterion inapplicable");
    }
    v.marginal = std::abs(std::abs(v.half_trace) - 1.0) <= kMarginalTolerance;
    v.stable = !v.marginal && v.half_trace > -1.0 && v.half_trace < 1.0;
    return v;
}

RayBound ray_bound_oracle(const Resonator& res, RayState source, unsigned max_round_trips) {
    if (max_round_trips < 1) throw InvalidResonator("ray_bound_oracle: need at least one round trip");
    const Mat2 m = round_trip_matrix(res);

    const double limit = kDivergenceFactor * (std::max(std::abs(source.y), std::abs(source.theta)) + 1.0);
    RayBound bound;
    bound.max_y = std::abs(source.y);
    bound.max_theta = std::abs(source.theta);
    Vec2 v = source.as_vec();
    for (unsigned i = 0; i < max_round_trips; ++i) {
        v = mat2_apply(m, v);
        bound.round_trips = i + 1;
        bound.max_y = std::max(bound.max_y, std::abs(v[0]));
        bound.max_theta = std::max(bound.max_theta, std::abs(v[1]));
        if (!(bound.max_y <= limit && bound.max_theta <= limit)) {
            bound.diverged = true;
            break;
        }
    }
    return bound;
}

Resonator fp_resonator(double radius, double d, double n) {
    Resonator res{OpticalInterface::spherical(radius), {}, {n, d}, OpticalInterface::spherical(radius)};
    require_valid(res);
    return res;
}

}  // namespace optics
