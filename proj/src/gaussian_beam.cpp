#include "optics/gaussian_beam.hpp"

#include <cmath>

#include "optics/errors.hpp"

namespace optics {

double WavefrontRadius::value() const {
    if (flat_) throw DomainError("flat wavefront has no finite radius");
    return radius_;
}

bool is_physical(const QParameter& qp) {
    return std::isfinite(qp.q.real()) && std::isfinite(qp.q.imag()) && qp.q.imag() > 0.0 &&
           std::isfinite(qp.lambda) && qp.lambda > 0.0;
}

QParameter q_from_geometry(WavefrontRadius radius, double w, double lambda) {
    if (!(std::isfinite(w) && w > 0.0)) throw DomainError("q_from_geometry: w must be > 0");
    if (!(std::isfinite(lambda) && lambda > 0.0)) {
        throw DomainError("q_from_geometry: lambda must be > 0");
    }
    if (!radius.is_flat() && !(std::isfinite(radius.value()) && radius.value() != 0.0)) {
        throw DomainError("q_from_geometry: R must be non-zero");
    }
    const Complex inv_q(radius.curvature(), -lambda / (kPi * w * w));
    return {1.0 / inv_q, lambda};
}

BeamSpot geometry_from_q(const QParameter& qp) {
    if (!is_physical(qp)) throw UnphysicalBeam("Im(q) must be > 0 and lambda > 0");
    const Complex inv_q = 1.0 / qp.q;
    const WavefrontRadius radius = std::abs(inv_q.real()) < 1e-15 * std::abs(inv_q)
                                       ? WavefrontRadius::flat()
                                       : WavefrontRadius::finite(1.0 / inv_q.real());
    const double w = std::sqrt(qp.lambda / (kPi * -inv_q.imag()));
    return {radius, w};
}

QParameter propagate_q(const QParameter& qp, const Mat2& m) {
    if (!is_physical(qp)) throw UnphysicalBeam("Im(q) must be > 0 and lambda > 0");
    return {mobius(m, qp.q), qp.lambda};
}

double rayleigh_range(double w0, double lambda) { return kPi * w0 * w0 / lambda; }

BeamGeometry beam_at(double w0, double lambda, double z) {
    if (!(std::isfinite(w0) && w0 > 0.0)) throw DomainError("beam_at: w0 must be > 0");
    if (!(std::isfinite(lambda) && lambda > 0.0)) throw DomainError("beam_at: lambda must be > 0");
    if (!std::isfinite(z)) throw DomainError("beam_at: z must be finite");

    const double zr = rayleigh_range(w0, lambda);
    const double ratio = z / zr;
    BeamGeometry g;
    g.w0 = w0;
    g.z_rayleigh = zr;
    g.z = z;
    g.w = w0 * std::sqrt(1.0 + ratio * ratio);
    if (z == 0.0) {
        g.radius = WavefrontRadius::flat();
    } else {
        const double inv = zr / z;
        g.radius = WavefrontRadius::finite(z * (1.0 + inv * inv));
    }
    return g;
}

}  // namespace optics
