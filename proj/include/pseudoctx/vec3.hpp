#ifndef PSEUDOCTX_VEC3_HPP
#define PSEUDOCTX_VEC3_HPP

#include <array>
#include <cmath>

namespace pseudoctx
{

using vec3 = std::array<double, 3>;

inline constexpr double dot(const vec3& a, const vec3& b) noexcept
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline constexpr vec3 cross(const vec3& a, const vec3& b) noexcept
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const vec3& a) noexcept { return std::sqrt(dot(a, a)); }

inline constexpr vec3 operator*(double s, const vec3& a) noexcept { return {s * a[0], s * a[1], s * a[2]}; }

inline constexpr vec3 operator+(const vec3& a, const vec3& b) noexcept
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline constexpr vec3 operator-(const vec3& a, const vec3& b) noexcept
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

/// Rotation about the z-axis by `angle` (counterclockwise seen from +z).
inline vec3 rotate_z(const vec3& a, double angle) noexcept
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * a[0] - s * a[1], s * a[0] + c * a[1], a[2]};
}

} // namespace pseudoctx

#endif // PSEUDOCTX_VEC3_HPP
