#pragma once

// Two-mirror optical resonators. A resonator is analysed by unfolding N
// round trips into a sequential optical system; the round-trip matrix M then
// decides stability through the half-trace criterion:
//   det M = 1  and  -1 < (M11 + M22) / 2 < 1.

#include <string_view>
#include <vector>

#include "optics/ray_optics.hpp"
#include "optics/validation.hpp"

namespace optics {

/// left mirror, inner components, the free space in front of the right
/// mirror, right mirror. Both mirrors have R > 0 when concave toward the
/// cavity.
struct Resonator {
    OpticalInterface left;
    std::vector<OpticalComponent> inner;
    FreeSpace space;
    OpticalInterface right;

    friend bool operator==(const Resonator&, const Resonator&) = default;
};

struct StabilityVerdict {
    double det = 0.0;
    double half_trace = 0.0;
    bool stable = false;
    bool marginal = false;

    // "stable", "unstable" or "marginal".
    std::string_view label() const;
};

struct RayBound {
    double max_y = 0.0;
    double max_theta = 0.0;
    bool diverged = false;
    unsigned round_trips = 0;  // iterations actually performed
};

inline constexpr double kUnimodularTolerance = 1e-6;
inline constexpr double kMarginalTolerance = 1e-9;
inline constexpr double kDivergenceFactor = 1e9;

ValidationReport validate_resonator(const Resonator& res);

/// N repetitions of one round trip: forward through the inner components and
/// the final free space, reflect on the right mirror, back through the same
/// media in reverse order, reflect on the left mirror. The terminal free
/// space has zero width. Throws InvalidResonator.
OpticalSystem unfold_resonator(const Resonator& res, unsigned round_trips);

Mat2 round_trip_matrix(const Resonator& res);

/// Throws InvalidResonator, and NonUnimodular when |det M - 1| > 1e-6.
StabilityVerdict stability(const Resonator& res);

/// Iterates the round-trip matrix on `source` up to `max_round_trips` times.
/// Diverged once |y| or |theta| exceeds 1e9 * (max(|y0|, |theta0|) + 1);
/// iteration stops there.
RayBound ray_bound_oracle(const Resonator& res, RayState source, unsigned max_round_trips);

/// Two spherical mirrors of radius R a distance d apart in a medium of index
/// n. Throws InvalidResonator unless R != 0, d >= 0, n > 0.
Resonator fp_resonator(double radius, double d, double n);

}  // namespace optics
