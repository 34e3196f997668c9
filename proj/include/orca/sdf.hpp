// Copyright (c) 2026 the orca authors.
// orca is licensed under the Apache License, Version 2.0.
// SPDX: Apache-2.0

#ifndef ORCA_SDF_HPP
#define ORCA_SDF_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "orca/vec.hpp"

namespace orca {

struct Ray {
    Vec3 origin;
    Vec3 dir;  // unit
    double t_near = 0.0;
    double t_max = std::numeric_limits<double>::infinity();

    Vec3 at(double t) const { return origin + t * dir; }
};

struct Sdf;

struct SdfSphere {
    Vec3 center;
    double radius = 1.0;
};

struct SdfPlane {
    Vec3 point;
    Vec3 normal{0, 0, 1};  // unit, points to the positive half-space
};

struct SdfCapsule {
    Vec3 a, b;
    double radius = 1.0;
};

// Exact Euclidean distance (closest-point solve), not the common
// quadric-scaling approximation: the eikonal property must hold.
struct SdfEllipsoid {
    Vec3 center;
    Vec3 semi_axes{1, 1, 1};
};

// Quadratic polynomial smooth-min over the children; not a true distance
// field, so derivatives go through finite differences.
struct SdfSmoothUnion {
    std::vector<Sdf> children;
    double blend_k = 0.1;
};

enum class ParametricKind : uint8_t { sphere, plane, capsule, ellipsoid };

// A primitive whose defining parameters are exposed as a flat vector, so the
// fitter can perturb them. Layouts:
//   sphere    (cx,cy,cz,r)
//   plane     (px,py,pz,nx,ny,nz)
//   capsule   (ax,ay,az,bx,by,bz,r)
//   ellipsoid (cx,cy,cz,ex,ey,ez)
struct SdfParametric {
    ParametricKind kind = ParametricKind::sphere;
    std::vector<double> theta;
};

struct Sdf {
    std::variant<SdfSphere, SdfPlane, SdfCapsule, SdfEllipsoid, SdfSmoothUnion, SdfParametric>
        shape;

    Sdf() : shape(SdfSphere{}) {}
    template <typename S>
    Sdf(S s) : shape(std::move(s)) {}
};

inline Sdf materialize(const SdfParametric& p) {
    const auto& t = p.theta;
    switch (p.kind) {
        case ParametricKind::sphere:
            if (t.size() != 4) throw std::invalid_argument("parametric sphere needs 4 params");
            return SdfSphere{{t[0], t[1], t[2]}, t[3]};
        case ParametricKind::plane:
            if (t.size() != 6) throw std::invalid_argument("parametric plane needs 6 params");
            return SdfPlane{{t[0], t[1], t[2]}, normalize({t[3], t[4], t[5]})};
        case ParametricKind::capsule:
            if (t.size() != 7) throw std::invalid_argument("parametric capsule needs 7 params");
            return SdfCapsule{{t[0], t[1], t[2]}, {t[3], t[4], t[5]}, t[6]};
        case ParametricKind::ellipsoid:
            if (t.size() != 6) throw std::invalid_argument("parametric ellipsoid needs 6 params");
            return SdfEllipsoid{{t[0], t[1], t[2]}, {t[3], t[4], t[5]}};
    }
    throw std::logic_error("unreachable");
}

namespace detail {

// Closest point on an ellipsoid (semi-axes e, centered at origin) to y.
// Root-find on the Lagrange multiplier; handles the medial-axis branch where
// a coordinate of y vanishes.
inline Vec3 ellipsoid_closest_point(const Vec3& e, Vec3 y) {
    Vec3 sign{y.x < 0 ? -1.0 : 1.0, y.y < 0 ? -1.0 : 1.0, y.z < 0 ? -1.0 : 1.0};
    y = abs(y);
    const double e2[3] = {e.x * e.x, e.y * e.y, e.z * e.z};
    const double yv[3] = {y.x, y.y, y.z};
    const double ev[3] = {e.x, e.y, e.z};

    auto f_of = [&](double lam) {
        double s = -1.0;
        for (int i = 0; i < 3; ++i) {
            if (yv[i] <= 0) continue;
            double q = yv[i] * ev[i] / (e2[i] + lam);
            s += q * q;
        }
        return s;
    };

    // Pole of the active terms bounds the root from below.
    double lam_lo = -std::numeric_limits<double>::infinity();
    bool any_active = false;
    for (int i = 0; i < 3; ++i) {
        if (yv[i] > 0) {
            lam_lo = std::max(lam_lo == -std::numeric_limits<double>::infinity() ? -e2[i]
                                                                                 : lam_lo,
                              -e2[i]);
            any_active = true;
        }
    }
    if (!any_active) {
        // Center of the ellipsoid: nearest surface point is along the
        // shortest semi-axis.
        int k = 0;
        if (ev[1] < ev[k]) k = 1;
        if (ev[2] < ev[k]) k = 2;
        Vec3 x{0, 0, 0};
        x[k] = ev[k];
        return x * sign;
    }

    double span = std::max({ev[0], ev[1], ev[2], length(y)});
    double lo = lam_lo + 1e-14 * std::max(1.0, std::abs(lam_lo));
    double hi = std::max(lam_lo + span, length(y) * std::max({ev[0], ev[1], ev[2]}));
    while (f_of(hi) > 0) hi = lam_lo + 2.0 * (hi - lam_lo);
    if (f_of(lo) < 0) lo = lam_lo;  // root hugs the pole
    for (int it = 0; it < 128; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f_of(mid) > 0) lo = mid; else hi = mid;
    }
    double lam = 0.5 * (lo + hi);

    // If the root violates a vanished coordinate's second-order condition,
    // the closest point leaves that coordinate plane (interior medial axis).
    int worst = -1;
    for (int i = 0; i < 3; ++i)
        if (yv[i] <= 0 && -e2[i] > lam && (worst < 0 || e2[i] > e2[worst])) worst = i;
    if (worst >= 0) {
        lam = -e2[worst];
        double rem = 1.0;
        Vec3 x{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            if (yv[i] <= 0) continue;
            double xi = yv[i] * e2[i] / (e2[i] + lam);
            x[i] = xi;
            rem -= (xi / ev[i]) * (xi / ev[i]);
        }
        x[worst] = ev[worst] * std::sqrt(std::max(0.0, rem));
        return x * sign;
    }

    Vec3 x;
    for (int i = 0; i < 3; ++i) x[i] = yv[i] * e2[i] / (e2[i] + lam);
    return x * sign;
}

inline double smooth_min(double a, double b, double k) {
    double h = std::clamp(0.5 + 0.5 * (b - a) / k, 0.0, 1.0);
    return b + (a - b) * h - k * h * (1.0 - h);
}

}  // namespace detail

// Signed distance; negative inside, exact for primitive variants.
inline double sdf_eval(const Sdf& sdf, const Vec3& x) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SdfSphere>) {
                return distance(x, s.center) - s.radius;
            } else if constexpr (std::is_same_v<T, SdfPlane>) {
                return dot(x - s.point, s.normal);
            } else if constexpr (std::is_same_v<T, SdfCapsule>) {
                Vec3 ab = s.b - s.a;
                double h = std::clamp(dot(x - s.a, ab) / length_squared(ab), 0.0, 1.0);
                return distance(x, s.a + h * ab) - s.radius;
            } else if constexpr (std::is_same_v<T, SdfEllipsoid>) {
                Vec3 rel = x - s.center;
                Vec3 cp = detail::ellipsoid_closest_point(s.semi_axes, rel);
                double d = distance(rel, cp);
                double q = length_squared(rel * Vec3{1.0 / s.semi_axes.x, 1.0 / s.semi_axes.y,
                                                     1.0 / s.semi_axes.z});
                return q < 1.0 ? -d : d;
            } else if constexpr (std::is_same_v<T, SdfSmoothUnion>) {
                if (s.children.empty()) return std::numeric_limits<double>::infinity();
                double d = sdf_eval(s.children[0], x);
                for (size_t i = 1; i < s.children.size(); ++i)
                    d = detail::smooth_min(d, sdf_eval(s.children[i], x), s.blend_k);
                return d;
            } else {
                return sdf_eval(materialize(s), x);
            }
        },
        sdf.shape);
}

inline std::optional<Vec3> sdf_normal(const Sdf& sdf, const Vec3& x, double scale = 1.0);

namespace detail {

inline std::optional<Vec3> normal_fd(const Sdf& sdf, const Vec3& x, double scale) {
    double h = 1e-5 * scale;
    Vec3 g{(sdf_eval(sdf, x + Vec3{h, 0, 0}) - sdf_eval(sdf, x - Vec3{h, 0, 0})) / (2 * h),
           (sdf_eval(sdf, x + Vec3{0, h, 0}) - sdf_eval(sdf, x - Vec3{0, h, 0})) / (2 * h),
           (sdf_eval(sdf, x + Vec3{0, 0, h}) - sdf_eval(sdf, x - Vec3{0, 0, h})) / (2 * h)};
    double n = length(g);
    if (n <= 1e-9) return std::nullopt;
    return g / n;
}

}  // namespace detail

// Unit SDF gradient. Analytic for primitives, central differences for
// blends. nullopt = degenerate gradient (|grad| <= 1e-9).
inline std::optional<Vec3> sdf_normal(const Sdf& sdf, const Vec3& x, double scale) {
    return std::visit(
        [&](const auto& s) -> std::optional<Vec3> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SdfSphere>) {
                Vec3 d = x - s.center;
                double n = length(d);
                if (n <= 1e-9) return std::nullopt;
                return d / n;
            } else if constexpr (std::is_same_v<T, SdfPlane>) {
                return s.normal;
            } else if constexpr (std::is_same_v<T, SdfCapsule>) {
                Vec3 ab = s.b - s.a;
                double h = std::clamp(dot(x - s.a, ab) / length_squared(ab), 0.0, 1.0);
                Vec3 d = x - (s.a + h * ab);
                double n = length(d);
                if (n <= 1e-9) return std::nullopt;
                return d / n;
            } else if constexpr (std::is_same_v<T, SdfEllipsoid>) {
                Vec3 rel = x - s.center;
                double f = sdf_eval(sdf, x);
                if (std::abs(f) <= 1e-9) {
                    // On the surface the quadric gradient is exact.
                    Vec3 g = rel * Vec3{1.0 / (s.semi_axes.x * s.semi_axes.x),
                                        1.0 / (s.semi_axes.y * s.semi_axes.y),
                                        1.0 / (s.semi_axes.z * s.semi_axes.z)};
                    double n = length(g);
                    if (n <= 1e-9) return std::nullopt;
                    return g / n;
                }
                Vec3 cp = detail::ellipsoid_closest_point(s.semi_axes, rel);
                Vec3 d = rel - cp;
                double n = length(d);
                if (n <= 1e-9) return std::nullopt;
                return (f < 0 ? -1.0 : 1.0) * d / n;
            } else if constexpr (std::is_same_v<T, SdfSmoothUnion>) {
                return detail::normal_fd(sdf, x, scale);
            } else {
                return sdf_normal(materialize(s), x, scale);
            }
        },
        sdf.shape);
}

namespace detail {

// K = div(n)/2 by 6-point central differences on the normal field.
inline std::optional<double> mean_curvature_fd(const Sdf& sdf, const Vec3& x, double scale) {
    double h = 1e-4 * scale;
    double div = 0;
    for (int i = 0; i < 3; ++i) {
        Vec3 dp{0, 0, 0}, dm{0, 0, 0};
        dp[i] = h;
        dm[i] = -h;
        auto np = sdf_normal(sdf, x + dp, scale);
        auto nm = sdf_normal(sdf, x + dm, scale);
        if (!np || !nm) return std::nullopt;
        div += ((*np)[i] - (*nm)[i]) / (2 * h);
    }
    return div / 2.0;
}

}  // namespace detail

// Mean curvature, K > 0 convex seen from outside (sphere of radius R gives
// 1/R). Valid near the zero set; primitives are analytic.
inline std::optional<double> sdf_mean_curvature(const Sdf& sdf, const Vec3& x,
                                                double scale = 1.0) {
    return std::visit(
        [&](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SdfSphere>) {
                double r = distance(x, s.center);
                if (r <= 1e-9) return std::nullopt;
                return 1.0 / r;
            } else if constexpr (std::is_same_v<T, SdfPlane>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, SdfCapsule>) {
                Vec3 ab = s.b - s.a;
                double t = dot(x - s.a, ab) / length_squared(ab);
                double h = std::clamp(t, 0.0, 1.0);
                double rho = distance(x, s.a + h * ab);
                if (rho <= 1e-9) return std::nullopt;
                // Barrel: principal curvatures (1/rho, 0); caps: sphere-like.
                if (t > 0.0 && t < 1.0) return 1.0 / (2.0 * rho);
                return 1.0 / rho;
            } else if constexpr (std::is_same_v<T, SdfEllipsoid>) {
                // Mean curvature of the quadric level set through x:
                // K = (lap(F) |grad F|^2 - grad F^T H grad F) / (2 |grad F|^3).
                Vec3 rel = x - s.center;
                Vec3 inv2{1.0 / (s.semi_axes.x * s.semi_axes.x),
                          1.0 / (s.semi_axes.y * s.semi_axes.y),
                          1.0 / (s.semi_axes.z * s.semi_axes.z)};
                Vec3 g = 2.0 * rel * inv2;
                double gn = length(g);
                if (gn <= 1e-9) return std::nullopt;
                double lap = 2.0 * (inv2.x + inv2.y + inv2.z);
                double ghg = 2.0 * dot(g * inv2, g);
                return (lap * gn * gn - ghg) / (2.0 * gn * gn * gn);
            } else if constexpr (std::is_same_v<T, SdfSmoothUnion>) {
                return detail::mean_curvature_fd(sdf, x, scale);
            } else {
                return sdf_mean_curvature(materialize(s), x, scale);
            }
        },
        sdf.shape);
}

// Loose world bounds; planes get a large finite box.
inline Bounds3 sdf_bounds(const Sdf& sdf) {
    return std::visit(
        [&](const auto& s) -> Bounds3 {
            using T = std::decay_t<decltype(s)>;
            Bounds3 b;
            if constexpr (std::is_same_v<T, SdfSphere>) {
                b.expand(s.center - Vec3{s.radius, s.radius, s.radius});
                b.expand(s.center + Vec3{s.radius, s.radius, s.radius});
            } else if constexpr (std::is_same_v<T, SdfPlane>) {
                b.expand(s.point - Vec3{1e6, 1e6, 1e6});
                b.expand(s.point + Vec3{1e6, 1e6, 1e6});
            } else if constexpr (std::is_same_v<T, SdfCapsule>) {
                Vec3 r{s.radius, s.radius, s.radius};
                b.expand(min(s.a, s.b) - r);
                b.expand(max(s.a, s.b) + r);
            } else if constexpr (std::is_same_v<T, SdfEllipsoid>) {
                b.expand(s.center - s.semi_axes);
                b.expand(s.center + s.semi_axes);
            } else if constexpr (std::is_same_v<T, SdfSmoothUnion>) {
                for (const auto& c : s.children) {
                    Bounds3 cb = sdf_bounds(c);
                    Vec3 pad{s.blend_k, s.blend_k, s.blend_k};
                    b.expand(cb.lo - pad);
                    b.expand(cb.hi + pad);
                }
            } else {
                return sdf_bounds(materialize(s));
            }
            return b;
        },
        sdf.shape);
}

struct TraceOptions {
    int max_steps = 256;
    double step_scale = 1.0;
    double scene_scale = 1.0;

    double eps_hit() const { return 1e-5 * scene_scale; }
};

struct SurfaceSample {
    double t = 0;
    Vec3 point;
    Vec3 normal;
    double mean_curvature = 0;
    bool valid = false;
    int iterations = 0;
};

// Sphere tracing to the first zero crossing, then a few Newton steps along
// the ray to tighten the hit well below eps_hit.
inline SurfaceSample intersect(const Sdf& sdf, const Ray& ray,
                               const TraceOptions& opt = TraceOptions{}) {
    SurfaceSample out;
    const double eps = opt.eps_hit();
    double t = ray.t_near;
    double prev_t = t;
    double prev_f = sdf_eval(sdf, ray.at(t));
    bool hit = false;
    int step = 0;
    for (; step < opt.max_steps; ++step) {
        double f = (step == 0) ? prev_f : sdf_eval(sdf, ray.at(t));
        if (std::abs(f) <= eps) {
            hit = true;
            break;
        }
        if (f * prev_f < 0) {
            // Overshot a crossing (blended fields); bisect back.
            double lo = prev_t, hi = t;
            for (int it = 0; it < 64; ++it) {
                double mid = 0.5 * (lo + hi);
                if (sdf_eval(sdf, ray.at(mid)) * prev_f > 0) lo = mid; else hi = mid;
            }
            t = 0.5 * (lo + hi);
            hit = true;
            break;
        }
        prev_t = t;
        prev_f = f;
        t += opt.step_scale * std::abs(f);
        if (t > ray.t_max) break;
    }
    out.iterations = step;
    if (!hit) return out;

    // Newton along the ray: t -= f / (grad f . d).
    for (int it = 0; it < 3; ++it) {
        Vec3 x = ray.at(t);
        double f = sdf_eval(sdf, x);
        auto n = sdf_normal(sdf, x, opt.scene_scale);
        if (!n) break;
        double dfdt = dot(*n, ray.dir);
        if (std::abs(dfdt) < 1e-12) break;
        t -= f / dfdt;
    }
    if (t < ray.t_near || t > ray.t_max) return out;

    Vec3 x = ray.at(t);
    if (std::abs(sdf_eval(sdf, x)) > eps) return out;
    auto n = sdf_normal(sdf, x, opt.scene_scale);
    if (!n) return out;
    auto k = sdf_mean_curvature(sdf, x, opt.scene_scale);
    out.t = t;
    out.point = x;
    out.normal = *n;
    out.mean_curvature = k.value_or(0.0);
    out.valid = dot(out.normal, ray.dir) < 0;  // front-facing only
    return out;
}

struct OsculatingSphere {
    Vec3 center;
    double radius = 0;   // > 0
    double sign_k = 1;   // +1 convex, -1 concave
};

enum class OsculatingRadiusConvention : uint8_t {
    inverse_mean_curvature,  // R = 1/|K|; a sphere osculates itself
    paper_two_over_k,        // R = 2/|K|
};

// nullopt = near-planar surface (|K| below K_min); callers take the planar
// branch of the virtual-cone construction.
inline std::optional<OsculatingSphere> osculating_sphere(
    const SurfaceSample& sample, double scene_scale = 1.0,
    OsculatingRadiusConvention convention = OsculatingRadiusConvention::inverse_mean_curvature) {
    const double k_min = 1e-6 / scene_scale;
    if (!sample.valid || std::abs(sample.mean_curvature) <= k_min) return std::nullopt;
    double r = 1.0 / std::abs(sample.mean_curvature);
    if (convention == OsculatingRadiusConvention::paper_two_over_k) r *= 2.0;
    double s = sample.mean_curvature > 0 ? 1.0 : -1.0;
    return OsculatingSphere{sample.point - s * r * sample.normal, r, s};
}

// Smallest non-negative root; nullopt when the ray misses or the sphere is
// entirely behind the origin.
inline std::optional<double> ray_sphere_intersect(const Ray& ray, const Vec3& center,
                                                  double radius) {
    Vec3 oc = ray.origin - center;
    double b = dot(oc, ray.dir);
    double c = length_squared(oc) - radius * radius;
    double disc = b * b - c;
    if (disc < 0) return std::nullopt;
    double s = std::sqrt(disc);
    double t0 = -b - s, t1 = -b + s;
    if (t0 >= 0) return t0;
    if (t1 >= 0) return t1;
    return std::nullopt;
}

inline std::optional<double> ray_sphere_intersect(const Ray& ray, const OsculatingSphere& sph) {
    return ray_sphere_intersect(ray, sph.center, sph.radius);
}

}  // namespace orca

#endif
