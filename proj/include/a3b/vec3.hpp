#pragma once

// Minimal 3-vector for spherical geometry.

#include <cmath>

namespace a3b {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
    friend Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3 operator*(const Vec3& v, double s) { return {v.x * s, v.y * s, v.z * s}; }
    friend Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

    Vec3 normalized() const {
        double n = std::sqrt(x * x + y * y + z * z);
        return {x / n, y / n, z / n};
    }
};

inline double dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}
inline double distance(const Vec3& u, const Vec3& v) { return norm(u - v); }

} // namespace a3b
