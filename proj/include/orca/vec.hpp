// Copyright (c) 2026 the orca authors.
// orca is licensed under the Apache License, Version 2.0.
// SPDX: Apache-2.0

#ifndef ORCA_VEC_HPP
#define ORCA_VEC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

namespace orca {

struct Vec2 {
    double x = 0, y = 0;
};

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double& operator[](int i) { return (&x)[i]; }
    double operator[](int i) const { return (&x)[i]; }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator*(const Vec3& a, const Vec3& b) { return {a.x * b.x, a.y * b.y, a.z * b.z}; }
inline Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }
inline Vec3& operator-=(Vec3& a, const Vec3& b) { a = a - b; return a; }
inline Vec3& operator*=(Vec3& a, double s) { a = a * s; return a; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length_squared(const Vec3& a) { return dot(a, a); }
inline double length(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalize(const Vec3& a) { return a / length(a); }
inline double distance(const Vec3& a, const Vec3& b) { return length(a - b); }
inline Vec3 min(const Vec3& a, const Vec3& b) {
    return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}
inline Vec3 max(const Vec3& a, const Vec3& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}
inline Vec3 abs(const Vec3& a) { return {std::abs(a.x), std::abs(a.y), std::abs(a.z)}; }
inline Vec3 clamp01(const Vec3& a) {
    return {std::clamp(a.x, 0.0, 1.0), std::clamp(a.y, 0.0, 1.0), std::clamp(a.z, 0.0, 1.0)};
}
inline double max_component(const Vec3& a) { return std::max(a.x, std::max(a.y, a.z)); }
inline bool is_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Angle between two vectors, robust near 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return 2.0 * std::atan2(length(a * length(b) - b * length(a)),
                            length(a * length(b) + b * length(a)));
}

// Any unit vector orthogonal to a unit vector n.
inline Vec3 orthogonal_to(const Vec3& n) {
    Vec3 ref = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return normalize(cross(n, ref));
}

// Column-major-free 3x3: rows stored explicitly.
struct Mat3 {
    Vec3 r0, r1, r2;  // rows

    static Mat3 identity() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }
    static Mat3 zero() { return {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}; }
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        return {{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}};
    }
    static Mat3 outer(const Vec3& a, const Vec3& b) {
        return {a.x * b, a.y * b, a.z * b};
    }

    Vec3 col(int i) const { return {r0[i], r1[i], r2[i]}; }
};

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {dot(m.r0, v), dot(m.r1, v), dot(m.r2, v)};
}
inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    return {a.r0 + b.r0, a.r1 + b.r1, a.r2 + b.r2};
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    return {a.r0 - b.r0, a.r1 - b.r1, a.r2 - b.r2};
}
inline Mat3 operator*(double s, const Mat3& m) { return {s * m.r0, s * m.r1, s * m.r2}; }
inline Mat3 transpose(const Mat3& m) {
    return Mat3::from_columns(m.r0, m.r1, m.r2);
}
inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 bt = transpose(b);
    return {{dot(a.r0, bt.r0), dot(a.r0, bt.r1), dot(a.r0, bt.r2)},
            {dot(a.r1, bt.r0), dot(a.r1, bt.r1), dot(a.r1, bt.r2)},
            {dot(a.r2, bt.r0), dot(a.r2, bt.r1), dot(a.r2, bt.r2)}};
}
inline double determinant(const Mat3& m) {
    return dot(m.r0, cross(m.r1, m.r2));
}

// Solve m x = b. Returns nullopt when the system is rank-deficient relative
// to the matrix scale (used as the parallel-rays detector upstream).
inline std::optional<Vec3> solve3x3(const Mat3& m, const Vec3& b, double rel_eps = 1e-12) {
    double det = determinant(m);
    double scale = std::max({std::abs(m.r0.x), std::abs(m.r1.y), std::abs(m.r2.z), 1e-300});
    if (std::abs(det) <= rel_eps * scale * scale * scale) return std::nullopt;
    // Cramer: substitute b into each column in turn.
    Mat3 t = transpose(m);
    Mat3 cx = Mat3::from_columns(b, t.r1, t.r2);
    Mat3 cy = Mat3::from_columns(t.r0, b, t.r2);
    Mat3 cz = Mat3::from_columns(t.r0, t.r1, b);
    return Vec3{determinant(cx) / det, determinant(cy) / det, determinant(cz) / det};
}

struct Bounds3 {
    Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
            std::numeric_limits<double>::max()};
    Vec3 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
            std::numeric_limits<double>::lowest()};

    void expand(const Vec3& p) { lo = min(lo, p); hi = max(hi, p); }
    Vec3 center() const { return 0.5 * (lo + hi); }
    Vec3 extent() const { return hi - lo; }
    double diagonal() const { return length(hi - lo); }
    bool contains(const Vec3& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z &&
               p.z <= hi.z;
    }
};

// Slab test; returns entry/exit parameters of the segment inside the box.
inline std::optional<std::pair<double, double>> intersect_bounds(const Bounds3& b, const Vec3& o,
                                                                 const Vec3& d, double t_min,
                                                                 double t_max) {
    double t0 = t_min, t1 = t_max;
    for (int i = 0; i < 3; ++i) {
        double inv = 1.0 / d[i];
        double near = (b.lo[i] - o[i]) * inv;
        double far = (b.hi[i] - o[i]) * inv;
        if (near > far) std::swap(near, far);
        t0 = std::max(t0, near);
        t1 = std::min(t1, far);
        if (t0 > t1) return std::nullopt;
    }
    return std::make_pair(t0, t1);
}

inline double degrees(double rad) { return rad * 180.0 / M_PI; }
inline double radians(double deg) { return deg * M_PI / 180.0; }

}  // namespace orca

#endif
