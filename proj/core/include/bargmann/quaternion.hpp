#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace bargmann {

using Complex = std::complex<double>;

/// Real quaternion w + x*i + y*j + z*k with the Hamilton multiplication
/// table i*j = k, j*i = -k. Components are stored as four doubles; the
/// complex plane embeds as w + x*i, so C coincides with the slice C_i.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    /// Embeds a complex number into the slice C_i.
    constexpr Quaternion(Complex c) : w(c.real()), x(c.imag()), y(0.0), z(0.0) {}
    constexpr Quaternion(double r) : w(r) {}

    static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    /// True when the j and k components vanish, i.e. the value lies in C_i.
    constexpr bool in_slice_i(double tol = 0.0) const {
        return std::abs(y) <= tol && std::abs(z) <= tol;
    }
    /// Distance to the slice C_i, measured as |y| + |z|.
    constexpr double slice_i_defect() const { return std::abs(y) + std::abs(z); }

    /// Projection of a slice-C_i value back to a complex number (y, z dropped).
    constexpr Complex to_complex_i() const { return {w, x}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

    // Hamilton product, non-commutative.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
    }
};

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// Exponential of a quaternion, exp(w + v) = e^w (cos|v| + (v/|v|) sin|v|).
inline Quaternion quat_exp(const Quaternion& q) {
    const double vnorm = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    const double ew = std::exp(q.w);
    if (vnorm == 0.0) return {ew, 0, 0, 0};
    const double s = ew * std::sin(vnorm) / vnorm;
    return {ew * std::cos(vnorm), s * q.x, s * q.y, s * q.z};
}

/// Unit pure quaternion I (I^2 = -1), a point of the imaginary-unit sphere.
class ImaginaryUnit {
  public:
    /// Normalizes the given direction; throws on the zero vector.
    ImaginaryUnit(double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (!(n > 0.0)) throw std::invalid_argument("ImaginaryUnit: zero direction");
        x_ = x / n; y_ = y / n; z_ = z / n;
    }

    static ImaginaryUnit i() { return {1, 0, 0}; }
    static ImaginaryUnit j() { return {0, 1, 0}; }
    static ImaginaryUnit k() { return {0, 0, 1}; }

    Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }

    /// The point a + b*I of the slice C_I.
    Quaternion slice_point(double a, double b) const {
        return {a, b * x_, b * y_, b * z_};
    }
    /// Embeds a complex value into the slice C_I.
    Quaternion embed(Complex c) const { return slice_point(c.real(), c.imag()); }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

  private:
    double x_, y_, z_;
};

/// Slice coordinates of a quaternion: q = a + b*J with b >= 0.
/// For real q (b = 0) the returned axis defaults to i.
struct SliceCoordinates {
    double a;
    double b;
    ImaginaryUnit axis;
};

inline SliceCoordinates slice_coordinates(const Quaternion& q) {
    const double b = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (b == 0.0) return {q.w, 0.0, ImaginaryUnit::i()};
    return {q.w, b, ImaginaryUnit(q.x, q.y, q.z)};
}

}  // namespace bargmann
