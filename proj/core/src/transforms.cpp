#include "bargmann/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bargmann/hermite.hpp"
#include "bargmann/spaces.hpp"

namespace bargmann {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

inline Complex minus_i_pow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, -1};
        case 2: return {-1, 0};
        default: return {0, 1};
    }
}

}  // namespace

Complex SymbolMap::map_to_line(Complex z, Complex w) const {
    return theta * (z + Complex(0, 1) * w) * (1.0 / kSqrt2);
}

std::pair<Complex, Complex> SymbolMap::map_to_plane(Complex xi) const {
    const Complex t = theta * xi * (1.0 / kSqrt2);
    return {t, Complex(0, -1) * t};
}

double b1_multiplier(int m, double nu) {
    return std::pow(nu / std::numbers::pi, 0.25) * std::exp2(0.5 * m) * std::pow(nu, m);
}

FockCoeffs1 b1_forward(const HermiteCoeffs& f) {
    FockCoeffs1 out;
    out.nu = f.nu;
    out.a.resize(f.c.size());
    for (std::size_t m = 0; m < f.c.size(); ++m)
        out.a[m] = f.c[m] * b1_multiplier(static_cast<int>(m), f.nu);
    return out;
}

HermiteCoeffs b1_inverse(const FockCoeffs1& f) {
    HermiteCoeffs out;
    out.nu = f.nu;
    out.c.resize(f.a.size());
    for (std::size_t m = 0; m < f.a.size(); ++m)
        out.c[m] = f.a[m] / b1_multiplier(static_cast<int>(m), f.nu);
    return out;
}

Complex b1_forward_quad(const std::function<Complex(double)>& f, double nu,
                        const QuadratureRule& rule, Complex z) {
    const double c1 = std::pow(nu / std::numbers::pi, 0.75);
    const Complex quad = rule.integrate(
        [&](double x) { return f(x) * std::exp(nu * (kSqrt2 * x * z - 0.5 * z * z)); });
    return c1 * quad;
}

Complex b1_inverse_quad(const std::function<Complex(Complex)>& f, double nu,
                        const PlanarRule& rule, double x) {
    const double c1 = std::pow(nu / std::numbers::pi, 0.75);
    const Complex quad = rule.integrate([&](Complex xi) {
        const Complex xb = std::conj(xi);
        return f(xi) * std::exp(nu * (kSqrt2 * x * xb - 0.5 * xb * xb));
    });
    return c1 * quad;
}

FockCoeffs2 b2_forward(const HermiteTensor& g) {
    FockCoeffs2 out = FockCoeffs2::zero(g.nu, g.rows, g.cols);
    for (std::size_t m = 0; m < g.rows; ++m)
        for (std::size_t n = 0; n < g.cols; ++n)
            out.at(m, n) = g.at(m, n) * b1_multiplier(static_cast<int>(m), g.nu) *
                           b1_multiplier(static_cast<int>(n), g.nu);
    return out;
}

HermiteTensor b2_inverse(const FockCoeffs2& f) {
    HermiteTensor out = HermiteTensor::zero(f.nu, f.rows, f.cols);
    for (std::size_t m = 0; m < f.rows; ++m)
        for (std::size_t n = 0; n < f.cols; ++n)
            out.at(m, n) = f.at(m, n) / (b1_multiplier(static_cast<int>(m), f.nu) *
                                         b1_multiplier(static_cast<int>(n), f.nu));
    return out;
}

ASubspaceCoeffs b2_forward_fock1(const FockCoeffs1& f) {
    ASubspaceCoeffs out;
    out.nu = f.nu;
    out.b.resize(f.a.size());
    const double c = std::sqrt(f.nu / std::numbers::pi);
    for (std::size_t m = 0; m < f.a.size(); ++m) out.b[m] = c * std::exp2(-0.5 * m) * f.a[m];
    return out;
}

Complex b2_forward_quad(const std::function<Complex(Complex)>& f, double nu,
                        const PlanarRule& rule, Complex z, Complex w) {
    const double c2 = std::pow(nu / std::numbers::pi, 1.5);
    const Complex quad = rule.integrate([&](Complex zeta) {
        const double x = zeta.real();
        const double y = zeta.imag();
        return f(zeta) *
               std::exp(nu * (kSqrt2 * (x * z + y * w) - 0.5 * (z * z + w * w)));
    });
    return c2 * quad;
}

Complex b2_inverse_quad(const FockCoeffs2& f, const PlanarRule& rule, Complex zeta) {
    const double nu = f.nu;
    const double x = zeta.real();
    const double y = zeta.imag();
    const double c2 = std::pow(nu / std::numbers::pi, 1.5);
    const Complex quad = rule.integrate([&](Complex z) {
        const Complex zb = std::conj(z);
        const Complex outer = std::exp(nu * (kSqrt2 * x * zb - 0.5 * zb * zb));
        return outer * rule.integrate([&](Complex w) {
            const Complex wb = std::conj(w);
            return eval_fock2(f, z, w) * std::exp(nu * (kSqrt2 * y * wb - 0.5 * wb * wb));
        });
    });
    return c2 * quad;
}

ASubspaceCoeffs g_transform(const HermiteCoeffs& f) {
    ASubspaceCoeffs out;
    out.nu = f.nu;
    out.b.resize(f.c.size());
    const double c1 = std::pow(f.nu / std::numbers::pi, 0.75);
    for (std::size_t m = 0; m < f.c.size(); ++m)
        out.b[m] = c1 * std::pow(f.nu, static_cast<double>(m)) * f.c[m];
    return out;
}

Complex g_transform_quad(const std::function<Complex(double)>& f, double nu,
                         const QuadratureRule& rule, Complex z, Complex w) {
    const Complex xi = SymbolMap::psi1().map_to_line(z, w);
    return std::sqrt(nu / std::numbers::pi) * b1_forward_quad(f, nu, rule, xi);
}

FockCoeffs1 compose_psi2(const FockCoeffs2& f) {
    FockCoeffs1 out;
    out.nu = f.nu;
    if (f.rows == 0 || f.cols == 0) return out;
    out.a.assign(f.rows + f.cols - 1, Complex{});
    for (std::size_t m = 0; m < f.rows; ++m)
        for (std::size_t n = 0; n < f.cols; ++n)
            out.a[m + n] += minus_i_pow(static_cast<int>(n)) *
                            std::exp2(-0.5 * static_cast<double>(m + n)) * f.at(m, n);
    return out;
}

HermiteCoeffs r_transform(const FockCoeffs2& f) {
    FockCoeffs1 line = compose_psi2(f);
    const double scale = std::sqrt(std::numbers::pi / f.nu);
    for (Complex& a : line.a) a *= scale;
    return b1_inverse(line);
}

Complex r_transform_quad_unnormalized(const FockCoeffs2& f, const PlanarRule& rule, double x) {
    const double nu = f.nu;
    return rule.integrate([&](Complex xi) {
        const auto [u, v] = SymbolMap::psi2().map_to_plane(xi);
        const Complex xb = std::conj(xi);
        return eval_fock2(f, u, v) * std::exp(nu * (kSqrt2 * x * xb - 0.5 * xb * xb));
    });
}

std::vector<Complex> default_complex_grid() {
    static const double ticks[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::vector<Complex> grid;
    grid.reserve(25);
    for (double re : ticks)
        for (double im : ticks) grid.emplace_back(re, im);
    return grid;
}

double g_factorization_residual(const HermiteCoeffs& f, std::span<const Complex> grid_z,
                                std::span<const Complex> grid_w, int quad_nodes) {
    const double nu = f.nu;
    const QuadratureRule rule = QuadratureRule::gauss_hermite(quad_nodes, nu);
    const auto& xs = rule.nodes();
    const auto& ws = rule.weights();
    const int n = rule.size();

    std::vector<Complex> fx(n);
    for (int t = 0; t < n; ++t) fx[t] = hermite_synthesis(f, xs[t]);

    const double c1 = std::pow(nu / std::numbers::pi, 0.75);
    const double c2 = std::pow(nu / std::numbers::pi, 1.5);

    // B1 f on the plane nodes xi = xs[iu] + i xs[iv], by one-dimensional
    // quadrature (row-major in iu, iv).
    std::vector<Complex> bf(static_cast<std::size_t>(n) * n);
    for (int iu = 0; iu < n; ++iu) {
        for (int iv = 0; iv < n; ++iv) {
            const Complex xi(xs[iu], xs[iv]);
            const Complex head = std::exp(-0.5 * nu * xi * xi);
            detail::Accumulator<Complex> acc;
            for (int t = 0; t < n; ++t)
                acc.add(ws[t] * fx[t] * std::exp(nu * kSqrt2 * xs[t] * xi));
            bf[static_cast<std::size_t>(iu) * n + iv] = c1 * head * acc.value();
        }
    }

    std::function<Complex(double)> f_fn = [&](double x) { return hermite_synthesis(f, x); };

    double res = 0.0;
    std::vector<Complex> left_factor(n), t_row(n);
    for (const Complex& z : grid_z) {
        for (int iu = 0; iu < n; ++iu)
            left_factor[iu] = ws[iu] * std::exp(nu * kSqrt2 * xs[iu] * z);
        for (int iv = 0; iv < n; ++iv) {
            detail::Accumulator<Complex> acc;
            for (int iu = 0; iu < n; ++iu)
                acc.add(left_factor[iu] * bf[static_cast<std::size_t>(iu) * n + iv]);
            t_row[iv] = acc.value();
        }
        for (const Complex& w : grid_w) {
            detail::Accumulator<Complex> acc;
            for (int iv = 0; iv < n; ++iv)
                acc.add(ws[iv] * std::exp(nu * kSqrt2 * xs[iv] * w) * t_row[iv]);
            const Complex lhs = c2 * std::exp(-0.5 * nu * (z * z + w * w)) * acc.value();
            const Complex rhs = g_transform_quad(f_fn, nu, rule, z, w);
            res = std::max(res, std::abs(lhs - rhs));
        }
    }
    return res;
}

}  // namespace bargmann
