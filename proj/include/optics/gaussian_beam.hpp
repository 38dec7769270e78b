#pragma once

// Gaussian-beam q-parameter:  1/q = 1/R - j lambda / (pi w^2),
// propagated through a ray-transfer matrix by the ABCD law
//   q_out = (A q + B) / (C q + D).
//
// lambda is the wavelength in the local medium (lambda_vacuum / n).
//
// The waist-referenced geometry used here is the one forced by free-space
// propagation q(z) = z + j zR:
//   R(z) = z (1 + (zR/z)^2),   w(z) = w0 sqrt(1 + (z/zR)^2).

#include "optics/core_math.hpp"

namespace optics {

/// Wavefront radius of curvature, with an explicit flat (infinite) state.
class WavefrontRadius {
public:
    static constexpr WavefrontRadius flat() { return WavefrontRadius(true, 0.0); }
    static constexpr WavefrontRadius finite(double r) { return WavefrontRadius(false, r); }

    constexpr bool is_flat() const { return flat_; }
    // Throws DomainError when flat.
    double value() const;
    // 1/R, zero when flat.
    constexpr double curvature() const { return flat_ ? 0.0 : 1.0 / radius_; }

private:
    constexpr WavefrontRadius(bool flat, double r) : flat_(flat), radius_(r) {}
    bool flat_;
    double radius_;
};

struct QParameter {
    Complex q;
    double lambda = 0.0;
};

struct BeamSpot {
    WavefrontRadius radius = WavefrontRadius::flat();
    double w = 0.0;
};

struct BeamGeometry {
    WavefrontRadius radius = WavefrontRadius::flat();
    double w = 0.0;
    double w0 = 0.0;
    double z_rayleigh = 0.0;
    double z = 0.0;
};

bool is_physical(const QParameter& qp);

/// Throws DomainError unless w > 0, lambda > 0 and R != 0.
QParameter q_from_geometry(WavefrontRadius radius, double w, double lambda);

/// Throws UnphysicalBeam if Im(q) <= 0.
BeamSpot geometry_from_q(const QParameter& qp);

/// ABCD law. Throws UnphysicalBeam for an invalid input beam and
/// SingularTransform when C q + D vanishes.
QParameter propagate_q(const QParameter& qp, const Mat2& m);

double rayleigh_range(double w0, double lambda);

/// Beam of waist w0 observed a distance z from the waist.
BeamGeometry beam_at(double w0, double lambda, double z);

}  // namespace optics
