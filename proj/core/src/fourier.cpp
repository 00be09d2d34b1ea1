#include "bargmann/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bargmann/hermite.hpp"
#include "bargmann/spaces.hpp"
#include "bargmann/transforms.hpp"

namespace bargmann {

namespace {

// unit^m for unit in {i, -i}, exact
Complex unit_pow(Complex unit, int m) {
    const int r = ((m % 4) + 4) % 4;
    const bool minus = unit.imag() < 0.0;
    switch (r) {
        case 0: return {1, 0};
        case 1: return minus ? Complex{0, -1} : Complex{0, 1};
        case 2: return {-1, 0};
        default: return minus ? Complex{0, 1} : Complex{0, -1};
    }
}

void require_unit(Complex theta) {
    if (std::abs(std::abs(theta) - 1.0) > 1e-12)
        throw std::invalid_argument("gamma_dilation: |theta| must be 1");
}

}  // namespace

Complex sign_unit(SignChoice sign) {
    return sign == SignChoice::minus ? Complex{0, -1} : Complex{0, 1};
}

HermiteCoeffs fourier_rescaled(const HermiteCoeffs& f, SignChoice sign) {
    HermiteCoeffs out;
    out.nu = f.nu;
    out.c.resize(f.c.size());
    const Complex u = sign_unit(sign);
    for (std::size_t m = 0; m < f.c.size(); ++m)
        out.c[m] = unit_pow(u, static_cast<int>(m)) * f.c[m];
    return out;
}

Complex fourier_rescaled_quad(const std::function<Complex(double)>& f, SignChoice sign,
                              double nu, const QuadratureRule& rule_half, double x) {
    if (std::abs(rule_half.weight_exponent() - 0.5 * nu) > 1e-12 * nu)
        throw std::invalid_argument("fourier_rescaled_quad: rule must have weight exponent nu/2");
    const Complex iu = sign_unit(sign);
    const double head = std::sqrt(nu / (2.0 * std::numbers::pi)) * std::exp(0.5 * nu * x * x);
    // e^{(nu/2)(x -+ iu)^2} = e^{nu x^2 / 2} e^{-+ i nu x u} e^{-nu u^2 / 2}
    const Complex quad =
        rule_half.integrate([&](double u) { return f(u) * std::exp(iu * (nu * x * u)); });
    return head * quad;
}

FockCoeffs1 gamma_dilation(Complex theta, const FockCoeffs1& f) {
    require_unit(theta);
    FockCoeffs1 out;
    out.nu = f.nu;
    out.a.resize(f.a.size());
    Complex p{1.0, 0.0};
    for (std::size_t m = 0; m < f.a.size(); ++m) {
        out.a[m] = p * f.a[m];
        p *= theta;
    }
    return out;
}

FockCoeffs2 gamma_dilation(Complex theta, const FockCoeffs2& f) {
    require_unit(theta);
    FockCoeffs2 out = FockCoeffs2::zero(f.nu, f.rows, f.cols);
    std::vector<Complex> pow(f.rows + f.cols);
    Complex p{1.0, 0.0};
    for (std::size_t k = 0; k < pow.size(); ++k) {
        pow[k] = p;
        p *= theta;
    }
    for (std::size_t m = 0; m < f.rows; ++m)
        for (std::size_t n = 0; n < f.cols; ++n) out.at(m, n) = pow[m + n] * f.at(m, n);
    return out;
}

ASubspaceCoeffs t1_transform(const FockCoeffs1& f, SignChoice sign) {
    ASubspaceCoeffs out;
    out.nu = f.nu;
    out.b.resize(f.a.size());
    const double c = std::sqrt(f.nu / std::numbers::pi);
    const Complex u = sign_unit(sign);
    for (std::size_t m = 0; m < f.a.size(); ++m)
        out.b[m] = c * unit_pow(u, static_cast<int>(m)) *
                   std::exp2(-0.5 * static_cast<double>(m)) * f.a[m];
    return out;
}

FockCoeffs1 t2_transform(const FockCoeffs2& f, SignChoice sign) {
    FockCoeffs1 out;
    out.nu = f.nu;
    if (f.rows == 0 || f.cols == 0) return out;
    out.a.assign(f.rows + f.cols - 1, Complex{});
    const double c = std::sqrt(std::numbers::pi / f.nu);
    const Complex u = sign_unit(sign);
    const Complex mi{0, -1};
    for (std::size_t m = 0; m < f.rows; ++m)
        for (std::size_t n = 0; n < f.cols; ++n) {
            const int k = static_cast<int>(m + n);
            out.a[k] += c * unit_pow(u, k) * unit_pow(mi, static_cast<int>(n)) *
                        std::exp2(-0.5 * k) * f.at(m, n);
        }
    return out;
}

ASubspaceCoeffs t1_via_definition(const FockCoeffs1& f, SignChoice sign) {
    return g_transform(fourier_rescaled(b1_inverse(f), sign));
}

FockCoeffs1 t2_via_definition(const FockCoeffs2& f, SignChoice sign) {
    return b1_forward(fourier_rescaled(r_transform(f), sign));
}

FockCoeffs1 t2_via_projection(const FockCoeffs2& f, SignChoice sign, const PlanarRule& rule) {
    const HermiteTensor tensor = b2_inverse(f);
    const int max_index =
        static_cast<int>(f.rows + f.cols) - 2;
    const FockCoeffs1 projected = proj_fock1(
        [&](Complex zeta) { return eval_hermite_tensor(tensor, zeta.real(), zeta.imag()); },
        f.nu, rule, max_index);
    return gamma_dilation(sign_unit(sign), projected);
}

Complex psi_k_eval(std::span<const Complex> Z, int k) {
    if (k < 1 || k > 30) throw std::invalid_argument("psi_k_eval: k must be in [1, 30]");
    const std::size_t expected = std::size_t{1} << k;
    if (Z.size() != expected)
        throw std::invalid_argument("psi_k_eval: Z must have length 2^k");
    const Complex i{0, 1};
    detail::Accumulator<Complex> acc;
    Complex ipow{1, 0};
    for (std::size_t m = 0; m < expected / 2; ++m) {
        acc.add(ipow * (Z[2 * m] + i * Z[2 * m + 1]));
        ipow *= i;
    }
    return std::exp2(-0.5 * k) * acc.value();
}

HyperFockCoeffs gk_transform(const HermiteCoeffs& f, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("gk_transform: k must be in {1, 2, 3}");
    const FockCoeffs1 line = b1_forward(f);
    // level-by-level doubling: going from d = 2^j to 2d coordinates picks up
    // one factor (nu/pi)^{1/2} per coordinate and composes the symbol with
    // the pairwise map; the ray coefficients themselves are unchanged.
    double kappa = 1.0;
    const double per_coordinate = std::sqrt(f.nu / std::numbers::pi);
    for (int j = 0; j < k; ++j) {
        const int d = 1 << j;
        for (int c = 0; c < d; ++c) kappa *= per_coordinate;
    }
    HyperFockCoeffs out;
    out.nu = f.nu;
    out.level = k;
    out.b.resize(line.a.size());
    for (std::size_t m = 0; m < line.a.size(); ++m) out.b[m] = kappa * line.a[m];
    return out;
}

double gk_constant(int k, double nu) {
    HermiteCoeffs f;
    f.nu = nu;
    f.c.resize(7);
    for (int m = 0; m <= 6; ++m) f.c[m] = Complex(1.0 / (1.0 + m), 0.5 / (1.0 + m * m));
    const HyperFockCoeffs lifted = gk_transform(f, k);
    const FockCoeffs1 ray = b1_forward(f);
    double num = 0.0, den = 0.0;
    for (std::size_t m = 0; m < ray.a.size(); ++m) {
        num += (lifted.b[m] * std::conj(ray.a[m])).real();
        den += std::norm(ray.a[m]);
    }
    return den > 0.0 ? num / den : 0.0;
}

double gk_constant_derived(int k, double nu) {
    return std::pow(nu / std::numbers::pi, ((1 << k) - 1) / 2.0);
}

double gk_constant_printed(int k, double nu) {
    return std::pow(nu / std::numbers::pi, 3.0 * (1 << k) / 4.0);
}

Complex eval_hyper_fock(const HyperFockCoeffs& f, std::span<const Complex> Z) {
    const Complex s = psi_k_eval(Z, f.level);
    Complex acc{};
    for (std::size_t m = f.b.size(); m-- > 0;) acc = acc * s + f.b[m];
    return acc;
}

}  // namespace bargmann
