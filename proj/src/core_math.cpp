#include "optics/core_math.hpp"

#include <algorithm>
#include <cmath>

#include "optics/errors.hpp"

namespace optics {

bool Mat2::is_finite() const {
    return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Vec2 mat2_apply(const Mat2& m, const Vec2& v) {
    return {m.a11 * v[0] + m.a12 * v[1], m.a21 * v[0] + m.a22 * v[1]};
}

double relative_difference(const Mat2& a, const Mat2& b, double floor) {
    const double d11 = a.a11 - b.a11;
    const double d12 = a.a12 - b.a12;
    const double d21 = a.a21 - b.a21;
    const double d22 = a.a22 - b.a22;
    const double num = std::sqrt(d11 * d11 + d12 * d12 + d21 * d21 + d22 * d22);
    const double den =
        std::sqrt(b.a11 * b.a11 + b.a12 * b.a12 + b.a21 * b.a21 + b.a22 * b.a22);
    return num / std::max(den, floor);
}

Mat2 sylvester_power(const Mat2& m, unsigned n) {
    if (std::abs(m.det() - 1.0) > 1e-9) {
        throw DomainError("sylvester_power: determinant must be 1");
    }
    const double c = m.half_trace();
    if (!(std::abs(c) < 1.0)) {
        throw DomainError("sylvester_power: |half-trace| must be < 1");
    }
    const double theta = std::acos(c);
    const double s = std::sin(theta);
    const double sn = std::sin(static_cast<double>(n) * theta);
    const double snm1 = std::sin((static_cast<double>(n) - 1.0) * theta);
    return {(m.a11 * sn - snm1) / s, m.a12 * sn / s, m.a21 * sn / s, (m.a22 * sn - snm1) / s};
}

RVec3 operator+(const RVec3& a, const RVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
RVec3 operator-(const RVec3& a, const RVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
RVec3 operator-(const RVec3& a) { return {-a.x, -a.y, -a.z}; }
RVec3 operator*(double s, const RVec3& v) { return {s * v.x, s * v.y, s * v.z}; }

double dot(const RVec3& a, const RVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

RVec3 cross(const RVec3& a, const RVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const RVec3& v) { return std::sqrt(dot(v, v)); }

RVec3 normalized(const RVec3& v) {
    const double len = norm(v);
    if (len == 0.0) throw DomainError("normalized: zero vector");
    return (1.0 / len) * v;
}

bool is_finite(const RVec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

CVec3 promote(const RVec3& v) { return {v.x, v.y, v.z}; }
CVec3 operator+(const CVec3& a, const CVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
CVec3 operator-(const CVec3& a, const CVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
CVec3 operator*(Complex s, const CVec3& v) { return {s * v.x, s * v.y, s * v.z}; }

Complex cdot(const CVec3& a, const CVec3& b) {
    return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

CVec3 ccross(const CVec3& a, const CVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const CVec3& v) { return std::sqrt(std::norm(v.x) + std::norm(v.y) + std::norm(v.z)); }

bool is_finite(const CVec3& v) {
    auto fin = [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
    return fin(v.x) && fin(v.y) && fin(v.z);
}

bool coplanar(std::span<const RVec3> points) {
    if (points.size() <= 3) return true;
    const RVec3 origin = points.front();
    const std::size_t m = points.size() - 1;
    for (std::size_t i = 0; i < m; ++i) {
        const RVec3 u = points[i + 1] - origin;
        for (std::size_t j = i + 1; j < m; ++j) {
            const RVec3 v = points[j + 1] - origin;
            const RVec3 uv = cross(u, v);
            for (std::size_t k = j + 1; k < m; ++k) {
                const RVec3 w = points[k + 1] - origin;
                const double scale = norm(u) * norm(v) * norm(w);
                if (std::abs(dot(uv, w)) > 1e-12 * scale) return false;
            }
        }
    }
    return true;
}

Complex mobius(const Mat2& m, Complex q) {
    const Complex den = m.a21 * q + m.a22;
    if (std::abs(den) < 1e-300) {
        throw SingularTransform("mobius: C*q + D vanishes");
    }
    return (m.a11 * q + m.a12) / den;
}

}  // namespace optics
