#include "bargmann/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bargmann {

namespace {

void require_same_nu(double a, double b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": mismatched nu");
}

inline double abs_sq(Complex v) { return std::norm(v); }
inline double abs_sq(const Quaternion& v) { return v.norm_sq(); }

// i^n as an exact complex unit
inline Complex i_pow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

double norm_sq(const HermiteCoeffs& f) {
    CompensatedSum s;
    for (std::size_t m = 0; m < f.c.size(); ++m)
        s.add(abs_sq(f.c[m]) * hermite_norm_sq(static_cast<int>(m), f.nu));
    return s.value();
}

double norm_sq(const HermiteCoeffsQ& f) {
    CompensatedSum s;
    for (std::size_t m = 0; m < f.c.size(); ++m)
        s.add(abs_sq(f.c[m]) * hermite_norm_sq(static_cast<int>(m), f.nu));
    return s.value();
}

double norm_sq(const FockCoeffs1& f) {
    CompensatedSum s;
    for (std::size_t m = 0; m < f.a.size(); ++m)
        s.add(abs_sq(f.a[m]) * fock1_norm_sq(static_cast<int>(m), f.nu));
    return s.value();
}

double norm_sq(const FockCoeffs2& f) {
    CompensatedSum s;
    for (std::size_t m = 0; m < f.rows; ++m)
        for (std::size_t n = 0; n < f.cols; ++n)
            s.add(abs_sq(f.at(m, n)) * fock1_norm_sq(static_cast<int>(m), f.nu) *
                  fock1_norm_sq(static_cast<int>(n), f.nu));
    return s.value();
}

double norm_sq(const ASubspaceCoeffs& f) {
    CompensatedSum s;
    for (std::size_t m = 0; m < f.b.size(); ++m)
        s.add(abs_sq(f.b[m]) * a2_basis_norm_sq(static_cast<int>(m), f.nu));
    return s.value();
}

double norm_sq(const HermiteTensor& t) {
    CompensatedSum s;
    for (std::size_t m = 0; m < t.rows; ++m)
        for (std::size_t n = 0; n < t.cols; ++n)
            s.add(abs_sq(t.at(m, n)) * hermite_norm_sq(static_cast<int>(m), t.nu) *
                  hermite_norm_sq(static_cast<int>(n), t.nu));
    return s.value();
}

double norm_sq(const SliceRegularSeries& f) {
    CompensatedSum s;
    for (std::size_t m = 0; m < f.c.size(); ++m)
        s.add(abs_sq(f.c[m]) * fock1_norm_sq(static_cast<int>(m), f.nu));
    return s.value();
}

Complex fock1_inner(const FockCoeffs1& f, const FockCoeffs1& g) {
    require_same_nu(f.nu, g.nu, "fock1_inner");
    detail::Accumulator<Complex> s;
    const std::size_t n = std::min(f.a.size(), g.a.size());
    for (std::size_t m = 0; m < n; ++m)
        s.add(f.a[m] * std::conj(g.a[m]) * fock1_norm_sq(static_cast<int>(m), f.nu));
    return s.value();
}

Complex fock2_inner(const FockCoeffs2& f, const FockCoeffs2& g) {
    require_same_nu(f.nu, g.nu, "fock2_inner");
    detail::Accumulator<Complex> s;
    const std::size_t rows = std::min(f.rows, g.rows);
    const std::size_t cols = std::min(f.cols, g.cols);
    for (std::size_t m = 0; m < rows; ++m)
        for (std::size_t n = 0; n < cols; ++n)
            s.add(f.at(m, n) * std::conj(g.at(m, n)) * fock1_norm_sq(static_cast<int>(m), f.nu) *
                  fock1_norm_sq(static_cast<int>(n), f.nu));
    return s.value();
}

Complex hermite_inner(const HermiteCoeffs& f, const HermiteCoeffs& g) {
    require_same_nu(f.nu, g.nu, "hermite_inner");
    detail::Accumulator<Complex> s;
    const std::size_t n = std::min(f.c.size(), g.c.size());
    for (std::size_t m = 0; m < n; ++m)
        s.add(f.c[m] * std::conj(g.c[m]) * hermite_norm_sq(static_cast<int>(m), f.nu));
    return s.value();
}

double tail_norm_fraction(const HermiteCoeffs& f, int keep_max) {
    double total = 0.0, tail = 0.0;
    for (std::size_t m = 0; m < f.c.size(); ++m) {
        const double t = abs_sq(f.c[m]) * hermite_norm_sq(static_cast<int>(m), f.nu);
        total += t;
        if (static_cast<int>(m) > keep_max) tail += t;
    }
    return total > 0.0 ? tail / total : 0.0;
}

double tail_norm_fraction(const FockCoeffs1& f, int keep_max) {
    double total = 0.0, tail = 0.0;
    for (std::size_t m = 0; m < f.a.size(); ++m) {
        const double t = abs_sq(f.a[m]) * fock1_norm_sq(static_cast<int>(m), f.nu);
        total += t;
        if (static_cast<int>(m) > keep_max) tail += t;
    }
    return total > 0.0 ? tail / total : 0.0;
}

Complex kernel_K1(Complex xi, Complex zeta, double nu) {
    return (nu / std::numbers::pi) * std::exp(nu * xi * std::conj(zeta));
}

Complex kernel_K2(Complex u, Complex v, Complex z, Complex w, double nu) {
    const double c = nu / std::numbers::pi;
    return c * c * std::exp(nu * (u * std::conj(z) + v * std::conj(w)));
}

FockCoeffs1 proj_fock1(const std::function<Complex(Complex)>& f, double nu,
                       const PlanarRule& rule, int max_index) {
    FockCoeffs1 out;
    out.nu = nu;
    out.a.resize(max_index + 1);
    for (int m = 0; m <= max_index; ++m) {
        const Complex moment = rule.integrate([&](Complex zeta) {
            return f(zeta) * std::pow(std::conj(zeta), m);
        });
        out.a[m] = moment / fock1_norm_sq(m, nu);
    }
    return out;
}

FockCoeffs1 proj_fock1(const FockCoeffs1& f) { return f; }

FockCoeffs2 dzw_apply(const FockCoeffs2& f) {
    const std::size_t rows = f.rows > 1 ? f.rows - 1 : 1;
    const std::size_t cols = f.cols > 1 ? f.cols - 1 : 1;
    FockCoeffs2 out = FockCoeffs2::zero(f.nu, rows, cols);
    for (std::size_t m = 0; m < out.rows; ++m)
        for (std::size_t n = 0; n < out.cols; ++n) {
            Complex v{};
            if (m + 1 < f.rows) v += static_cast<double>(m + 1) * f.at(m + 1, n);
            if (n + 1 < f.cols) v += Complex(0, 1) * static_cast<double>(n + 1) * f.at(m, n + 1);
            out.at(m, n) = v;
        }
    return out;
}

double dzw_residual(const FockCoeffs2& f) {
    const FockCoeffs2 d = dzw_apply(f);
    double r = 0.0;
    for (const Complex& v : d.a) r = std::max(r, std::abs(v));
    return r;
}

FockCoeffs2 a_subspace_embed(const ASubspaceCoeffs& b) {
    const std::size_t n = std::max<std::size_t>(b.b.size(), 1);
    FockCoeffs2 out = FockCoeffs2::zero(b.nu, n, n);
    for (std::size_t m = 0; m < b.b.size(); ++m)
        for (std::size_t j = 0; j <= m; ++j)
            out.at(m - j, j) = b.b[m] * binomial(static_cast<int>(m), static_cast<int>(j)) *
                               i_pow(static_cast<int>(j));
    return out;
}

ASubspaceCoeffs a_subspace_extract(const FockCoeffs2& f, double tol) {
    const double residual = dzw_residual(f);
    if (residual > tol) throw NotInSubspaceError(residual);
    ASubspaceCoeffs out;
    out.nu = f.nu;
    out.b.resize(f.rows);
    for (std::size_t k = 0; k < f.rows; ++k) out.b[k] = f.at(k, 0);
    return out;
}

}  // namespace bargmann
