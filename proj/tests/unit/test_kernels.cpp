#include <doctest.h>

#include <cstring>

#include "optics/em_optics.hpp"
#include "optics/errors.hpp"
#include "optics/kernels.hpp"
#include "support.hpp"

using namespace optics;
namespace k = optics::kernels;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("boundary samples lie on the plane and are reproducible") {
    const InterfaceSystem sys = example_interface_fields(0.4, 1.0, 1.5, 1.0, 1e15, 6e6);
    const auto a = k::boundary_samples(sys, 200, 9);
    const auto b = k::boundary_samples(sys, 200, 9);
    const auto c = k::boundary_samples(sys, 200, 10);
    REQUIRE(a.size() == 200);
    const double lambda = wavelength_of(sys.incident.k);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].r.x == 0.0);
        CHECK(std::abs(a[i].r.y) <= 10 * lambda);
        CHECK(std::abs(a[i].r.z) <= 10 * lambda);
        CHECK(a[i].t >= 0.0);
        CHECK(same_bits(a[i].t, b[i].t));
    }
    CHECK_FALSE(same_bits(a[0].t, c[0].t));
}

TEST_CASE("tilted interface plane") {
    InterfaceSystem sys = example_interface_fields(0.4, 1.0, 1.5, 1.0, 1e15, 6e6);
    sys.spec.normal = normalized(RVec3{1, 2, -2});
    sys.spec.point = {1e-6, 0, 3e-7};
    for (const auto& s : k::boundary_samples(sys, 100, 1)) CHECK(is_on_plane(sys.spec, s.r));
}

TEST_CASE("serial and parallel residuals agree exactly") {
    testsupport::Rng rng(113);
    for (int i = 0; i < 10; ++i) {
        const InterfaceSystem sys =
            example_interface_fields(testsupport::uniform(rng, 0, 1.2), 1.0, testsupport::uniform(rng, 1, 2), 1.0, 1e15, 6e6);
        const auto pts = k::boundary_samples(sys, 2000, i);
        CHECK(same_bits(k::serial::max_boundary_residual(sys, pts), k::parallel::max_boundary_residual(sys, pts)));
    }
}

TEST_CASE("serial and parallel ray traces agree exactly") {
    testsupport::Rng rng(127);
    std::vector<OpticalSystem> systems;
    std::vector<RayState> sources;
    for (int i = 0; i < 1000; ++i) {
        systems.push_back(testsupport::random_system(rng));
        sources.push_back({testsupport::uniform(rng, -1, 1), testsupport::uniform(rng, -0.1, 0.1)});
    }
    const auto s = k::serial::trace_final_states(systems, sources);
    const auto p = k::parallel::trace_final_states(systems, sources);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(same_bits(s[i].y, p[i].y));
        CHECK(same_bits(s[i].theta, p[i].theta));
        CHECK(same_bits(s[i].y, trace_ray(systems[i], sources[i]).last().y));
    }
    sources.pop_back();
    CHECK_THROWS_AS(k::parallel::trace_final_states(systems, sources), DimensionMismatch);
    CHECK_THROWS_AS(k::serial::trace_final_states(systems, sources), DimensionMismatch);
}

TEST_CASE("serial and parallel resonator sweeps agree exactly") {
    std::vector<Resonator> fps;
    for (int i = 1; i <= 300; ++i) fps.push_back(fp_resonator(1.0, 3.0 * i / 301.0, 1.0));
    const auto vs = k::serial::stability_sweep(fps);
    const auto vp = k::parallel::stability_sweep(fps);
    const auto bs = k::serial::ray_bound_sweep(fps, {1e-3, 0}, 500);
    const auto bp = k::parallel::ray_bound_sweep(fps, {1e-3, 0}, 500);
    for (std::size_t i = 0; i < fps.size(); ++i) {
        CHECK(same_bits(vs[i].half_trace, vp[i].half_trace));
        CHECK(vs[i].label() == vp[i].label());
        CHECK(bs[i].diverged == bp[i].diverged);
        CHECK(bs[i].round_trips == bp[i].round_trips);
        CHECK(same_bits(bs[i].max_y, bp[i].max_y));
    }
}

TEST_CASE("errors inside a parallel sweep reach the caller") {
    std::vector<Resonator> fps(64, fp_resonator(1.0, 0.5, 1.0));
    fps[37].space.d = -1.0;
    CHECK_THROWS_AS(k::parallel::stability_sweep(fps), InvalidResonator);
    CHECK(k::max_threads() >= 1);
}
