#pragma once

// Paraxial ray optics: optical-system descriptions, their validity predicate,
// per-element ray-transfer matrices, and two independent ways to push a ray
// through a system (matrix composition and step-wise tracing).
//
// Conventions
//   - lengths in meters, angles in radians;
//   - free space translates by its geometric width d, matrix [[1, d], [0, 1]];
//     all refractive-index dependence lives in the interface matrices;
//   - a spherical mirror with R > 0 is concave toward the incoming ray and
//     acts as [[1, 0], [-2/R, 1]];
//   - an interface is entered from its component's own free space (index n0)
//     and exits into the next component's free space, or the terminal one (n1).

#include <cstddef>
#include <vector>

#include "optics/core_math.hpp"
#include "optics/validation.hpp"

namespace optics {

struct FreeSpace {
    double n = 1.0;  // refractive index
    double d = 0.0;  // width, meters

    friend constexpr bool operator==(const FreeSpace&, const FreeSpace&) = default;
};

/// Plane, or spherical with a non-zero radius of curvature.
struct OpticalInterface {
    enum class Shape { plane, spherical };

    Shape shape = Shape::plane;
    double radius = 0.0;  // meaningful for spherical only

    static constexpr OpticalInterface plane() { return {Shape::plane, 0.0}; }
    static constexpr OpticalInterface spherical(double r) { return {Shape::spherical, r}; }

    constexpr bool is_spherical() const { return shape == Shape::spherical; }

    friend constexpr bool operator==(const OpticalInterface&, const OpticalInterface&) = default;
};

enum class InterfaceKind { transmitted, reflected };

struct OpticalComponent {
    FreeSpace space;
    OpticalInterface iface;
    InterfaceKind kind = InterfaceKind::transmitted;

    friend constexpr bool operator==(const OpticalComponent&, const OpticalComponent&) = default;
};

struct OpticalSystem {
    std::vector<OpticalComponent> components;
    FreeSpace terminal;

    friend bool operator==(const OpticalSystem&, const OpticalSystem&) = default;
};

struct RayState {
    double y = 0.0;      // distance from the optical axis
    double theta = 0.0;  // inclination

    Vec2 as_vec() const { return {y, theta}; }
    static RayState from_vec(const Vec2& v) { return {v[0], v[1]}; }
};

/// States at the source, after the first free space, and after each
/// subsequent interface-plus-free-space step: components.size() + 2 entries.
struct RayTrace {
    std::vector<RayState> states;

    const RayState& last() const { return states.back(); }
};

bool is_valid_free_space(const FreeSpace& fs);
bool is_valid_interface(const OpticalInterface& iface);

// Appends the violated clauses of one free space / interface to `report`.
void check_free_space(const FreeSpace& fs, std::size_t index, ValidationReport& report);
void check_interface(const OpticalInterface& iface, std::size_t index, ValidationReport& report);

/// Every violated constraint, keyed by component index. The terminal free
/// space is reported with index components.size(). Empty report <=> valid.
ValidationReport validate_system(const OpticalSystem& sys);

Mat2 free_space_matrix(const FreeSpace& fs);
Mat2 interface_matrix(const OpticalInterface& iface, InterfaceKind kind, double n0, double n1);

/// Element matrices in traversal order: F(space_0), I_0, F(space_1), I_1, ...,
/// F(terminal).
std::vector<Mat2> element_matrices(const OpticalSystem& sys);

/// M_k ... M_2 M_1. Throws InvalidSystem for an invalid system.
Mat2 system_composition(const OpticalSystem& sys);

/// Applies the element matrices to the ray one at a time.
RayTrace trace_ray(const OpticalSystem& sys, RayState source);

}  // namespace optics
