#pragma once

// Monochromatic plane waves at a plane interface between two media.
//
// A plane wave is stored as its amplitude record (k, omega, E, H); the field
// at (r, t) is exp(-j (k.r - omega t)) times each amplitude. Boundary
// conditions require continuity of n x E and n x H across the interface
// plane, with the incident and reflected waves summed on side 1.

#include <cstdint>
#include <span>

#include "optics/core_math.hpp"
#include "optics/validation.hpp"

namespace optics {

inline constexpr double kVacuumImpedance = 376.730313668;    // ohms
inline constexpr double kSpeedOfLight = 299792458.0;         // m/s

struct PlaneWave {
    RVec3 k;           // rad/m
    double omega = 0;  // rad/s
    CVec3 e;           // V/m
    CVec3 h;           // A/m
};

struct InterfaceSpec {
    double n1 = 1.0;
    double n2 = 1.0;
    RVec3 point;             // any point of the plane
    RVec3 normal{1, 0, 0};   // unit, from medium 1 into medium 2
};

struct EMConstants {
    double eta0 = kVacuumImpedance;
    double k0 = 1.0;  // vacuum wavenumber, rad/m
};

struct InterfaceSystem {
    InterfaceSpec spec;
    PlaneWave incident;
    PlaneWave reflected;
    PlaneWave transmitted;
    EMConstants consts;
};

struct FieldValue {
    CVec3 e;
    CVec3 h;
};

enum class Polarization { s, p };

struct FresnelCoefficients {
    double r = 0.0;
    double t = 0.0;
};

/// Reflection/transmission amplitudes of the worked TE-style example: r_a = (n2 cos ti - n1 cos tt) / (n2 cos ti + n1 cos tt) * a,
/// t_a = 2 n2 cos ti / (n2 cos ti + n1 cos tt) * a.
struct ExampleAmplitudes {
    double theta_t = 0.0;
    double r_a = 0.0;
    double t_a = 0.0;
};

FieldValue eval_plane_wave(const PlaneWave& w, const RVec3& r, double t);

/// 2 pi / |k|. Throws DomainError for the zero vector.
double wavelength_of(const RVec3& k);

/// (1 / (eta0 k0)) k x E.
CVec3 h_from_e(const RVec3& k, const CVec3& e, const EMConstants& consts);

bool is_on_plane(const InterfaceSpec& spec, const RVec3& r);

/// n x (sum of side-1 fields) - n x (side-2 field) at (r, t). Throws
/// OffPlanePoint unless r lies on the interface plane.
FieldValue boundary_residual(std::span<const PlaneWave> side1, const PlaneWave& side2,
                             const InterfaceSpec& spec, const RVec3& r, double t);

/// max(|dE| / E_scale, |dH| / H_scale) for the system's boundary residual,
/// where each scale is the largest amplitude norm among the three waves.
double relative_boundary_residual(const InterfaceSystem& sys, const RVec3& r, double t);

/// arcsin(n1 sin(theta_i) / n2). Throws TotalInternalReflection when the
/// argument exceeds 1 and DomainError for theta_i outside [0, pi/2) or
/// non-positive indices.
double snell_angle(double n1, double n2, double theta_i);

/// k_i - 2 (k_i . n) n: the mirror image of -k_i about the unit normal.
RVec3 reflect_wavevector(const RVec3& k_i, const RVec3& normal);

ExampleAmplitudes example_amplitudes(double theta_i, double n1, double n2, double a);

/// The incident/reflected/transmitted triple on the yz-plane (normal x) with
/// E along y. Amplitudes are those of example_amplitudes. H is taken as
/// given in the worked example, n/eta0 times the amplitude, with
/// components chosen to match tangential H across the plane; it is not
/// k x E / (eta0 k0).
InterfaceSystem example_interface_fields(double theta_i, double n1, double n2, double a,
                                         double omega, double k0);

/// Checks every clause of the plane-wave-at-interface constraint and the
/// hypotheses of the incidence/reflection laws. Boundary residuals are
/// sampled at `samples` seeded in-plane points and times.
///
/// Gating clauses: interface_valid, incident_non_null, direction_{incident,
/// reflected,transmitted}, norm_{...}, boundary_conditions.
/// Reported but not gating: reflected_non_null, transmitted_non_null
/// (preconditions of the two laws) and h_matches_k_cross_e_{...} (impedance relation between the
/// stored H and k x E).
ValidationReport validate_interface_system(const InterfaceSystem& sys, std::size_t samples,
                                           std::uint64_t seed);

/// coplanar({0, k_i, k_r, k_t, n}).
bool check_plane_of_incidence(const InterfaceSystem& sys);

/// Textbook Fresnel amplitude coefficients. Throws TotalInternalReflection.
FresnelCoefficients fresnel_standard(Polarization pol, double n1, double n2, double theta_i);

}  // namespace optics
