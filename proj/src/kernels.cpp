#include "optics/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>

#include "optics/errors.hpp"

namespace optics::kernels {

namespace {

// Orthonormal in-plane basis for a unit normal.
std::pair<RVec3, RVec3> plane_basis(const RVec3& normal) {
    const double ax = std::abs(normal.x), ay = std::abs(normal.y), az = std::abs(normal.z);
    RVec3 axis{0, 0, 1};
    if (ax <= ay && ax <= az) {
        axis = {1, 0, 0};
    } else if (ay <= az) {
        axis = {0, 1, 0};
    }
    const RVec3 t1 = normalized(cross(normal, axis));
    const RVec3 t2 = cross(normal, t1);
    return {t1, t2};
}

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionMismatch("kernels: systems and sources differ in length");
}

// Runs body(i) for i in [0, n) across threads; the first exception thrown by
// any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body body) {
    std::exception_ptr error;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(optics_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<BoundarySample> boundary_samples(const InterfaceSystem& sys, std::size_t count,
                                             std::uint64_t seed) {
    const double lambda = wavelength_of(sys.incident.k);
    if (!(sys.incident.omega > 0.0)) throw DomainError("boundary_samples: omega must be > 0");
    const double period = 2.0 * kPi / sys.incident.omega;
    const auto [t1, t2] = plane_basis(sys.spec.normal);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-10.0 * lambda, 10.0 * lambda);
    std::uniform_real_distribution<double> time(0.0, 10.0 * period);

    std::vector<BoundarySample> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = coord(rng);
        const double v = coord(rng);
        const double t = time(rng);
        out.push_back({sys.spec.point + u * t1 + v * t2, t});
    }
    return out;
}

namespace serial {

double max_boundary_residual(const InterfaceSystem& sys, std::span<const BoundarySample> samples) {
    double worst = 0.0;
    for (const auto& s : samples) worst = std::max(worst, relative_boundary_residual(sys, s.r, s.t));
    return worst;
}

std::vector<RayState> trace_final_states(std::span<const OpticalSystem> systems,
                                         std::span<const RayState> sources) {
    check_sizes(systems.size(), sources.size());
    std::vector<RayState> out;
    out.reserve(systems.size());
    for (std::size_t i = 0; i < systems.size(); ++i) out.push_back(trace_ray(systems[i], sources[i]).last());
    return out;
}

std::vector<StabilityVerdict> stability_sweep(std::span<const Resonator> resonators) {
    std::vector<StabilityVerdict> out;
    out.reserve(resonators.size());
    for (const auto& r : resonators) out.push_back(stability(r));
    return out;
}

std::vector<RayBound> ray_bound_sweep(std::span<const Resonator> resonators, RayState source,
                                      unsigned max_round_trips) {
    std::vector<RayBound> out;
    out.reserve(resonators.size());
    for (const auto& r : resonators) out.push_back(ray_bound_oracle(r, source, max_round_trips));
    return out;
}

}  // namespace serial

namespace parallel {

double max_boundary_residual(const InterfaceSystem& sys, std::span<const BoundarySample> samples) {
    double worst = 0.0;
    std::exception_ptr error;
    const auto count = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            const auto& s = samples[static_cast<std::size_t>(i)];
            worst = std::max(worst, relative_boundary_residual(sys, s.r, s.t));
        } catch (...) {
#pragma omp critical(optics_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return worst;
}

std::vector<RayState> trace_final_states(std::span<const OpticalSystem> systems,
                                         std::span<const RayState> sources) {
    check_sizes(systems.size(), sources.size());
    std::vector<RayState> out(systems.size());
    parallel_for(systems.size(), [&](std::size_t i) { out[i] = trace_ray(systems[i], sources[i]).last(); });
    return out;
}

std::vector<StabilityVerdict> stability_sweep(std::span<const Resonator> resonators) {
    std::vector<StabilityVerdict> out(resonators.size());
    parallel_for(resonators.size(), [&](std::size_t i) { out[i] = stability(resonators[i]); });
    return out;
}

std::vector<RayBound> ray_bound_sweep(std::span<const Resonator> resonators, RayState source,
                                      unsigned max_round_trips) {
    std::vector<RayBound> out(resonators.size());
    parallel_for(resonators.size(),
                 [&](std::size_t i) { out[i] = ray_bound_oracle(resonators[i], source, max_round_trips); });
    return out;
}

}  // namespace parallel

int max_threads() { return omp_get_max_threads(); }

}  // namespace optics::kernels
