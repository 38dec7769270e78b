#include "optics/ray_optics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "optics/errors.hpp"

namespace optics {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void require_valid(const OpticalSystem& sys) {
    const ValidationReport report = validate_system(sys);
    if (!report.passed()) throw InvalidSystem("invalid optical system: " + report.summary());
}

}  // namespace

bool is_valid_free_space(const FreeSpace& fs) {
    return std::isfinite(fs.n) && fs.n > 0.0 && std::isfinite(fs.d) && fs.d >= 0.0;
}

bool is_valid_interface(const OpticalInterface& iface) {
    if (!iface.is_spherical()) return true;
    return std::isfinite(iface.radius) && iface.radius != 0.0;
}

void check_free_space(const FreeSpace& fs, std::size_t index, ValidationReport& report) {
    if (!(std::isfinite(fs.n) && fs.n > 0.0)) {
        report.add({"0 < n", "n = " + num(fs.n), false, true, index});
    }
    if (!(std::isfinite(fs.d) && fs.d >= 0.0)) {
        report.add({"0 <= d", "d = " + num(fs.d), false, true, index});
    }
}

void check_interface(const OpticalInterface& iface, std::size_t index, ValidationReport& report) {
    if (!is_valid_interface(iface)) {
        report.add({"R != 0", "R = " + num(iface.radius), false, true, index});
    }
}

ValidationReport validate_system(const OpticalSystem& sys) {
    ValidationReport report;
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        check_free_space(sys.components[i].space, i, report);
        check_interface(sys.components[i].iface, i, report);
    }
    check_free_space(sys.terminal, sys.components.size(), report);
    return report;
}

Mat2 free_space_matrix(const FreeSpace& fs) {
    if (!is_valid_free_space(fs)) throw InvalidComponent("free space requires 0 < n and 0 <= d");
    return {1.0, fs.d, 0.0, 1.0};
}

Mat2 interface_matrix(const OpticalInterface& iface, InterfaceKind kind, double n0, double n1) {
    if (!(std::isfinite(n0) && n0 > 0.0 && std::isfinite(n1) && n1 > 0.0)) {
        throw InvalidComponent("interface requires positive refractive indices");
    }
    if (!is_valid_interface(iface)) throw InvalidComponent("spherical interface requires R != 0");

    if (kind == InterfaceKind::reflected) {
        if (!iface.is_spherical()) return Mat2::identity();
        return {1.0, 0.0, -2.0 / iface.radius, 1.0};
    }
    if (!iface.is_spherical()) return {1.0, 0.0, 0.0, n0 / n1};
    return {1.0, 0.0, (n0 - n1) / (n1 * iface.radius), n0 / n1};
}

std::vector<Mat2> element_matrices(const OpticalSystem& sys) {
    require_valid(sys);
    std::vector<Mat2> out;
    out.reserve(2 * sys.components.size() + 1);
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
        const auto& c = sys.components[i];
        const double n1 = i + 1 < sys.components.size() ? sys.components[i + 1].space.n : sys.terminal.n;
        out.push_back(free_space_matrix(c.space));
        out.push_back(interface_matrix(c.iface, c.kind, c.space.n, n1));
    }
    out.push_back(free_space_matrix(sys.terminal));
    return out;
}

Mat2 system_composition(const OpticalSystem& sys) {
    Mat2 total = Mat2::identity();
    for (const Mat2& m : element_matrices(sys)) total = m * total;
    return total;
}

RayTrace trace_ray(const OpticalSystem& sys, RayState source) {
    const std::vector<Mat2> mats = element_matrices(sys);
    RayTrace trace;
    trace.states.reserve(sys.components.size() + 2);
    trace.states.push_back(source);

    Vec2 v = mat2_apply(mats[0], source.as_vec());
    trace.states.push_back(RayState::from_vec(v));
    // Each remaining hitting point is one interface followed by one free space.
    for (std::size_t i = 1; i + 1 < mats.size(); i += 2) {
        v = mat2_apply(mats[i], v);
        v = mat2_apply(mats[i + 1], v);
        trace.states.push_back(RayState::from_vec(v));
    }
    return trace;
}

}  // namespace optics
