#pragma once

// Batch kernels. Each has a serial reference in `kernels::serial` and an
// OpenMP version in `kernels::parallel` with identical results; tests pin
// the two together and bench/ compares their throughput.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "optics/em_optics.hpp"
#include "optics/ray_optics.hpp"
#include "optics/resonator.hpp"

namespace optics::kernels {

struct BoundarySample {
    RVec3 r;
    double t = 0.0;
};

/// Seeded points on the interface plane and times: both in-plane coordinates
/// uniform in [-10 lambda, 10 lambda] (lambda of the incident wave) about the
/// plane's reference point, t uniform in [0, 10 * 2 pi / omega].
std::vector<BoundarySample> boundary_samples(const InterfaceSystem& sys, std::size_t count,
                                             std::uint64_t seed);

namespace serial {

double max_boundary_residual(const InterfaceSystem& sys, std::span<const BoundarySample> samples);

// Final ray state of trace_ray(systems[i], sources[i]).
std::vector<RayState> trace_final_states(std::span<const OpticalSystem> systems,
                                         std::span<const RayState> sources);

std::vector<StabilityVerdict> stability_sweep(std::span<const Resonator> resonators);

std::vector<RayBound> ray_bound_sweep(std::span<const Resonator> resonators, RayState source,
                                      unsigned max_round_trips);

}  // namespace serial

namespace parallel {

double max_boundary_residual(const InterfaceSystem& sys, std::span<const BoundarySample> samples);

std::vector<RayState> trace_final_states(std::span<const OpticalSystem> systems,
                                         std::span<const RayState> sources);

std::vector<StabilityVerdict> stability_sweep(std::span<const Resonator> resonators);

std::vector<RayBound> ray_bound_sweep(std::span<const Resonator> resonators, RayState source,
                                      unsigned max_round_trips);

}  // namespace parallel

int max_threads();

}  // namespace optics::kernels
