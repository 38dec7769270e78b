#include "optics/em_optics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "optics/errors.hpp"
#include "optics/kernels.hpp"

namespace optics {

namespace {

constexpr double kValidationTolerance = 1e-9;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

bool non_null(const PlaneWave& w) { return norm(w.e) > 0.0 && norm(w.h) > 0.0; }

}  // namespace

FieldValue eval_plane_wave(const PlaneWave& w, const RVec3& r, double t) {
    const Complex phase = std::exp(Complex(0.0, -(dot(w.k, r) - w.omega * t)));
    return {phase * w.e, phase * w.h};
}

double wavelength_of(const RVec3& k) {
    const double len = norm(k);
    if (!(len > 0.0)) throw DomainError("wavelength_of: zero wavevector");
    return 2.0 * kPi / len;
}

CVec3 h_from_e(const RVec3& k, const CVec3& e, const EMConstants& consts) {
    return Complex(1.0 / (consts.eta0 * consts.k0)) * ccross(promote(k), e);
}

bool is_on_plane(const InterfaceSpec& spec, const RVec3& r) {
    const RVec3 rel = r - spec.point;
    return std::abs(dot(rel, spec.normal)) <= 1e-12 * std::max(1.0, norm(rel));
}

FieldValue boundary_residual(std::span<const PlaneWave> side1, const PlaneWave& side2,
                             const InterfaceSpec& spec, const RVec3& r, double t) {
    if (!is_on_plane(spec, r)) throw OffPlanePoint("boundary_residual: point is not on the interface plane");
    CVec3 e1;
    CVec3 h1;
    for (const PlaneWave& w : side1) {
        const FieldValue f = eval_plane_wave(w, r, t);
        e1 = e1 + f.e;
        h1 = h1 + f.h;
    }
    const FieldValue f2 = eval_plane_wave(side2, r, t);
    const CVec3 n = promote(spec.normal);
    return {ccross(n, e1) - ccross(n, f2.e), ccross(n, h1) - ccross(n, f2.h)};
}

double relative_boundary_residual(const InterfaceSystem& sys, const RVec3& r, double t) {
    const PlaneWave side1[] = {sys.incident, sys.reflected};
    const FieldValue d = boundary_residual(side1, sys.transmitted, sys.spec, r, t);
    double e_scale = std::max({norm(sys.incident.e), norm(sys.reflected.e), norm(sys.transmitted.e)});
    double h_scale = std::max({norm(sys.incident.h), norm(sys.reflected.h), norm(sys.transmitted.h)});
    if (e_scale == 0.0) e_scale = 1.0;
    if (h_scale == 0.0) h_scale = 1.0;
    return std::max(norm(d.e) / e_scale, norm(d.h) / h_scale);
}

double snell_angle(double n1, double n2, double theta_i) {
    if (!(n1 > 0.0 && n2 > 0.0 && std::isfinite(n1) && std::isfinite(n2))) {
        throw DomainError("snell_angle: refractive indices must be positive");
    }
    if (!(theta_i >= 0.0 && theta_i < kPi / 2.0)) {
        throw DomainError("snell_angle: incidence angle must lie in [0, pi/2)");
    }
    const double s = n1 * std::sin(theta_i) / n2;
    if (s > 1.0) throw TotalInternalReflection("total internal reflection");
    return std::asin(s);
}

RVec3 reflect_wavevector(const RVec3& k_i, const RVec3& normal) {
    return k_i - (2.0 * dot(k_i, normal)) * normal;
}

ExampleAmplitudes example_amplitudes(double theta_i, double n1, double n2, double a) {
    const double theta_t = snell_angle(n1, n2, theta_i);
    const double ci = std::cos(theta_i);
    const double ct = std::cos(theta_t);
    const double den = n2 * ci + n1 * ct;
    return {theta_t, (n2 * ci - n1 * ct) / den * a, 2.0 * n2 * ci / den * a};
}

InterfaceSystem example_interface_fields(double theta_i, double n1, double n2, double a, double omega,
                                         double k0) {
    if (!(a > 0.0)) throw DomainError("example_interface_fields: amplitude must be > 0");
    if (!(omega > 0.0 && k0 > 0.0)) throw DomainError("example_interface_fields: omega and k0 must be > 0");
    const ExampleAmplitudes amp = example_amplitudes(theta_i, n1, n2, a);
    const double theta_r = theta_i;
    const double ci = std::cos(theta_i), si = std::sin(theta_i);
    const double cr = std::cos(theta_r), sr = std::sin(theta_r);
    const double ct = std::cos(amp.theta_t), st = std::sin(amp.theta_t);
    const double eta0 = kVacuumImpedance;

    InterfaceSystem sys;
    sys.spec = {n1, n2, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    sys.consts = {eta0, k0};

    sys.incident.k = (k0 * n1) * RVec3{ci, 0.0, si};
    sys.reflected.k = (k0 * n1) * RVec3{-cr, 0.0, sr};
    sys.transmitted.k = (k0 * n2) * RVec3{ct, 0.0, st};
    sys.incident.omega = sys.reflected.omega = sys.transmitted.omega = omega;

    sys.incident.e = {0.0, a, 0.0};
    sys.reflected.e = {0.0, amp.r_a, 0.0};
    sys.transmitted.e = {0.0, amp.t_a, 0.0};

    sys.incident.h = {a * (n1 / eta0) * ci, 0.0, -a * (n1 / eta0) * si};
    sys.reflected.h = {-amp.r_a * (n1 / eta0) * cr, 0.0, -amp.r_a * (n1 / eta0) * sr};
    sys.transmitted.h = {amp.t_a * (n2 / eta0) * ct, 0.0, -amp.t_a * (n2 / eta0) * st};
    return sys;
}

ValidationReport validate_interface_system(const InterfaceSystem& sys, std::size_t samples,
                                           std::uint64_t seed) {
    ValidationReport report;
    const InterfaceSpec& spec = sys.spec;
    const RVec3& n = spec.normal;

    const bool iface_ok = std::isfinite(spec.n1) && spec.n1 > 0.0 && std::isfinite(spec.n2) &&
                          spec.n2 > 0.0 && is_finite(n) && is_finite(spec.point) &&
                          std::abs(norm(n) - 1.0) <= 1e-12;
    report.add({"interface_valid", iface_ok ? "" : "need n1 > 0, n2 > 0, |normal| = 1", iface_ok});

    report.add({"incident_non_null", "", non_null(sys.incident)});
    report.add({"reflected_non_null", "precondition of the incidence and reflection laws",
                non_null(sys.reflected), false});
    report.add({"transmitted_non_null", "precondition of the incidence law", non_null(sys.transmitted), false});

    const double ki_n = dot(sys.incident.k, n);
    const double kr_n = dot(sys.reflected.k, n);
    const double kt_n = dot(sys.transmitted.k, n);
    report.add({"direction_incident", "k_i.n = " + num(ki_n), ki_n >= 0.0});
    report.add({"direction_reflected", "k_r.n = " + num(kr_n), kr_n <= 0.0});
    report.add({"direction_transmitted", "k_t.n = " + num(kt_n), kt_n >= 0.0});

    const double k0 = sys.consts.k0;
    auto norm_clause = [&](const char* name, const PlaneWave& w, double index) {
        const double expected = k0 * index;
        const double got = norm(w.k);
        const bool ok = std::abs(got - expected) <= kValidationTolerance * std::abs(expected);
        report.add({name, "|k| = " + num(got) + ", k0 n = " + num(expected), ok});
    };
    norm_clause("norm_incident", sys.incident, spec.n1);
    norm_clause("norm_reflected", sys.reflected, spec.n1);
    norm_clause("norm_transmitted", sys.transmitted, spec.n2);

    auto h_clause = [&](const char* name, const PlaneWave& w) {
        const CVec3 expected = h_from_e(w.k, w.e, sys.consts);
        const double scale = std::max({norm(w.h), norm(expected), 1e-300});
        const double mismatch = norm(w.h - expected) / scale;
        report.add({name, "relative mismatch " + num(mismatch), mismatch <= kValidationTolerance, false});
    };
    h_clause("h_matches_k_cross_e_incident", sys.incident);
    h_clause("h_matches_k_cross_e_reflected", sys.reflected);
    h_clause("h_matches_k_cross_e_transmitted", sys.transmitted);

    double residual = 0.0;
    bool sampled = false;
    if (iface_ok && samples > 0) {
        const auto points = kernels::boundary_samples(sys, samples, seed);
        residual = kernels::parallel::max_boundary_residual(sys, points);
        sampled = true;
    }
    report.add({"boundary_conditions",
                sampled ? "max relative residual " + num(residual) : "not sampled",
                sampled && residual < kValidationTolerance});
    return report;
}

bool check_plane_of_incidence(const InterfaceSystem& sys) {
    const RVec3 pts[] = {RVec3{}, sys.incident.k, sys.reflected.k, sys.transmitted.k, sys.spec.normal};
    return coplanar(pts);
}

FresnelCoefficients fresnel_standard(Polarization pol, double n1, double n2, double theta_i) {
    const double theta_t = snell_angle(n1, n2, theta_i);
    const double ci = std::cos(theta_i);
    const double ct = std::cos(theta_t);
    if (pol == Polarization::s) {
        const double den = n1 * ci + n2 * ct;
        return {(n1 * ci - n2 * ct) / den, 2.0 * n1 * ci / den};
    }
    const double den = n2 * ci + n1 * ct;
    return {(n2 * ci - n1 * ct) / den, 2.0 * n1 * ci / den};
}

}  // namespace optics
