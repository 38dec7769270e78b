#pragma once

// Fixed-shape numeric kernel: 2x2 real matrices, real and complex 3-vectors,
// and the handful of operations the optics modules are built from. Every type
// is a plain value; every function is pure.

#include <array>
#include <complex>
#include <span>

namespace optics {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// 2x2 real matrix [[a11, a12], [a21, a22]].
struct Mat2 {
    double a11 = 1.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 1.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    constexpr double det() const { return a11 * a22 - a12 * a21; }
    constexpr double trace() const { return a11 + a22; }
    constexpr double half_trace() const { return 0.5 * (a11 + a22); }

    bool is_finite() const;

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

using Vec2 = std::array<double, 2>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat2_mul(a, b); }

Vec2 mat2_apply(const Mat2& m, const Vec2& v);

// Frobenius norm of (a - b) divided by max(||b||_F, floor).
double relative_difference(const Mat2& a, const Mat2& b, double floor = 1e-300);

/// M^n for det(M) = 1 and |half-trace| < 1, via Sylvester's closed form with
/// cos(theta) = half-trace:
///   M^n = (M sin(n theta) - I sin((n-1) theta)) / sin(theta).
/// Throws DomainError outside that domain.
Mat2 sylvester_power(const Mat2& m, unsigned n);

struct RVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr bool operator==(const RVec3&, const RVec3&) = default;
};

RVec3 operator+(const RVec3& a, const RVec3& b);
RVec3 operator-(const RVec3& a, const RVec3& b);
RVec3 operator-(const RVec3& a);
RVec3 operator*(double s, const RVec3& v);
double dot(const RVec3& a, const RVec3& b);
RVec3 cross(const RVec3& a, const RVec3& b);
double norm(const RVec3& v);
RVec3 normalized(const RVec3& v);
bool is_finite(const RVec3& v);

struct CVec3 {
    Complex x{};
    Complex y{};
    Complex z{};

    friend bool operator==(const CVec3&, const CVec3&) = default;
};

CVec3 promote(const RVec3& v);
CVec3 operator+(const CVec3& a, const CVec3& b);
CVec3 operator-(const CVec3& a, const CVec3& b);
CVec3 operator*(Complex s, const CVec3& v);
// Hermitian pairing, conjugate-linear in the first argument.
Complex cdot(const CVec3& a, const CVec3& b);
CVec3 ccross(const CVec3& a, const CVec3& b);
double norm(const CVec3& v);
bool is_finite(const CVec3& v);

/// True iff all points lie in one plane. Every scalar triple product of
/// difference vectors taken from the first point must vanish relative to the
/// product of the three lengths (tolerance 1e-12).
bool coplanar(std::span<const RVec3> points);

/// (A q + B) / (C q + D). Throws SingularTransform if |C q + D| < 1e-300.
Complex mobius(const Mat2& m, Complex q);

}  // namespace optics
