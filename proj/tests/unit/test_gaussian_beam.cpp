#include <doctest.h>

#include <cmath>

#include "optics/errors.hpp"
#include "optics/gaussian_beam.hpp"
#include "support.hpp"

using namespace optics;

TEST_CASE("waist q-parameter") {
    // w = 1 mm at 1 um: q = j pi w^2 / lambda = j pi.
    const QParameter qp = q_from_geometry(WavefrontRadius::flat(), 1e-3, 1e-6);
    CHECK(std::abs(qp.q.real()) < 1e-15);
    CHECK(qp.q.imag() == doctest::Approx(kPi).epsilon(1e-14));
    const BeamSpot s = geometry_from_q(qp);
    CHECK(s.radius.is_flat());
    CHECK(s.w == doctest::Approx(1e-3).epsilon(1e-14));
}

TEST_CASE("flat wavefront is a distinct value, not a huge radius") {
    CHECK(WavefrontRadius::flat().is_flat());
    CHECK(WavefrontRadius::flat().curvature() == 0.0);
    CHECK_THROWS_AS(WavefrontRadius::flat().value(), DomainError);
    CHECK(WavefrontRadius::finite(-2.0).curvature() == -0.5);
}

TEST_CASE("q_from_geometry domain") {
    CHECK_THROWS_AS(q_from_geometry(WavefrontRadius::flat(), 0.0, 1e-6), DomainError);
    CHECK_THROWS_AS(q_from_geometry(WavefrontRadius::flat(), 1e-3, -1.0), DomainError);
    CHECK_THROWS_AS(q_from_geometry(WavefrontRadius::finite(0.0), 1e-3, 1e-6), DomainError);
}

TEST_CASE("unphysical beams are refused") {
    CHECK_FALSE(is_physical({Complex(1, 0), 1e-6}));
    CHECK_FALSE(is_physical({Complex(1, -1), 1e-6}));
    CHECK_FALSE(is_physical({Complex(0, 1), 0.0}));
    CHECK_THROWS_AS(geometry_from_q({Complex(1, -1), 1e-6}), UnphysicalBeam);
    CHECK_THROWS_AS(propagate_q({Complex(1, 0), 1e-6}, Mat2::identity()), UnphysicalBeam);
}

TEST_CASE("free space adds its length to q") {
    const QParameter in{Complex(0.3, 2.0), 5e-7};
    const QParameter out = propagate_q(in, Mat2{1, 1.5, 0, 1});
    CHECK(out.q.real() == doctest::Approx(1.8));
    CHECK(out.q.imag() == doctest::Approx(2.0));
    CHECK(propagate_q(in, Mat2::identity()).q == in.q);
}

TEST_CASE("thin lens focal shift") {
    // Thin lens of focal length f: 1/q_out = 1/q_in - 1/f.
    const double f = 0.25;
    const QParameter in = q_from_geometry(WavefrontRadius::flat(), 2e-3, 1e-6);
    const QParameter out = propagate_q(in, Mat2{1, 0, -1.0 / f, 1});
    const BeamSpot s = geometry_from_q(out);
    REQUIRE_FALSE(s.radius.is_flat());
    CHECK(s.radius.value() == doctest::Approx(-f).epsilon(1e-12));
    CHECK(s.w == doctest::Approx(2e-3).epsilon(1e-12));
}

TEST_CASE("geometry round trip") {
    testsupport::Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const double lambda = testsupport::uniform(rng, 2e-7, 2e-6);
        const double w = testsupport::uniform(rng, 1e-5, 1e-2);
        const WavefrontRadius r = testsupport::coin(rng) ? WavefrontRadius::flat()
                                                         : WavefrontRadius::finite(testsupport::signed_radius(rng));
        const BeamSpot s = geometry_from_q(q_from_geometry(r, w, lambda));
        CHECK(s.w == doctest::Approx(w).epsilon(1e-12));
        CHECK(s.radius.is_flat() == r.is_flat());
        if (!r.is_flat()) CHECK(s.radius.value() == doctest::Approx(r.value()).epsilon(1e-12));
    }
}

TEST_CASE("beam_at matches free-space propagation from the waist") {
    const double w0 = 5e-4, lambda = 6.33e-7;
    const double zr = rayleigh_range(w0, lambda);
    const QParameter waist = q_from_geometry(WavefrontRadius::flat(), w0, lambda);
    for (int i = -50; i <= 50; ++i) {
        if (i == 0) continue;
        const double z = zr * i / 10.0;
        const BeamGeometry g = beam_at(w0, lambda, z);
        const BeamSpot s = geometry_from_q(propagate_q(waist, Mat2{1, z, 0, 1}));
        CHECK(g.w == doctest::Approx(s.w).epsilon(1e-12));
        CHECK(g.radius.value() == doctest::Approx(s.radius.value()).epsilon(1e-12));
        CHECK(g.z_rayleigh == doctest::Approx(zr));
    }
    CHECK(beam_at(w0, lambda, 0.0).radius.is_flat());
    // At one Rayleigh range: w = sqrt(2) w0 and R = 2 zR.
    CHECK(beam_at(w0, lambda, zr).w == doctest::Approx(std::sqrt(2.0) * w0));
    CHECK(beam_at(w0, lambda, zr).radius.value() == doctest::Approx(2.0 * zr));
}

TEST_CASE("mobius action is a group action") {
    testsupport::Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        const auto a = testsupport::random_sl2(rng);
        const auto b = testsupport::random_sl2(rng);
        const Mat2 ma{a[0], a[1], a[2], a[3]}, mb{b[0], b[1], b[2], b[3]};
        const QParameter q{Complex(testsupport::uniform(rng, -2, 2), testsupport::uniform(rng, 0.1, 3)), 1e-6};
        const Complex two_step = propagate_q(propagate_q(q, ma), mb).q;
        const Complex composed = propagate_q(q, mb * ma).q;
        CHECK(std::abs(two_step - composed) <= 1e-10 * std::abs(composed));
    }
}
