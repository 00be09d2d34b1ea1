#include "bargmann/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "bargmann/fourier.hpp"
#include "bargmann/hermite.hpp"
#include "bargmann/slice_transforms.hpp"
#include "bargmann/spaces.hpp"
#include "bargmann/transforms.hpp"

namespace bargmann {

namespace {

using json = nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

// Criterion-pinned tolerances for coefficient-exact identities; the
// quadrature-class residuals run against config.tolerance.
constexpr double kTolIsometryCoeff = 1e-10;
constexpr double kTolImageAnnihilation = 1e-13;
constexpr double kTolLeftInverse = 1e-10;
constexpr double kTolPrefactor = 1e-10;
constexpr double kTolQuatRoundtrip = 1e-10;
constexpr double kTolSliceIndependence = 1e-9;
constexpr double kTolBridgeDualPath = 1e-7;
constexpr double kTolSliceInvariance = 1e-12;
constexpr double kTolJiRoundtrip = 1e-10;
constexpr double kTolKappaAtPi = 1e-10;
constexpr double kTolFourierClosed = 1e-10;
constexpr double kTolFourierComposition = 1e-12;
constexpr double kTolExactCoeff = 1e-13;
constexpr double kTolAppendixKappa = 1e-10;

class Uniform {
  public:
    explicit Uniform(std::uint64_t seed) : rng_(seed) {}
    // [-1, 1), identical on every platform
    double next() { return ((rng_() >> 11) * 0x1.0p-53) * 2.0 - 1.0; }
    Complex next_complex() {
        const double re = next();
        return {re, next()};
    }

  private:
    std::mt19937_64 rng_;
};

double max_coeff_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double r = 0.0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t m = 0; m < n; ++m) {
        const Complex av = m < a.size() ? a[m] : Complex{};
        const Complex bv = m < b.size() ? b[m] : Complex{};
        r = std::max(r, std::abs(av - bv));
    }
    return r;
}

double max_coeff_diff_q(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    double r = 0.0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t m = 0; m < n; ++m) {
        const Quaternion av = m < a.size() ? a[m] : Quaternion{};
        const Quaternion bv = m < b.size() ? b[m] : Quaternion{};
        r = std::max(r, (av - bv).norm());
    }
    return r;
}

TransformReport make_report(std::string identity, double residual, double tol,
                            const RunConfig& config) {
    TransformReport rep;
    rep.identity = std::move(identity);
    rep.residual = residual;
    rep.tolerance = tol;
    rep.pass = residual <= tol;
    rep.quad_nodes = config.quad_nodes;
    rep.truncation = config.truncation;
    return rep;
}

// Monomial pairings Q(a, b) = planar integral of zeta^a conj(zeta)^b and the
// derived Gram matrix of (z + i w)^m, all by quadrature.
struct QuadGram {
    int max_index;
    std::vector<Complex> monomial;  // (max_index+1)^2, row-major (a, b)
    std::vector<Complex> gram;      // (max_index+1)^2, row-major (m, m')

    const Complex& q(int a, int b) const { return monomial[a * (max_index + 1) + b]; }
    const Complex& g(int m, int mp) const { return gram[m * (max_index + 1) + mp]; }
};

QuadGram a2_gram_by_quadrature(int max_index, const PlanarRule& rule) {
    QuadGram out;
    out.max_index = max_index;
    const int k = max_index + 1;
    out.monomial.assign(static_cast<std::size_t>(k) * k, Complex{});

    const auto& xs = rule.axis().nodes();
    const auto& ws = rule.axis().weights();
    const int n = rule.axis().size();
    std::vector<Complex> pows(k);
    std::vector<detail::Accumulator<Complex>> acc(static_cast<std::size_t>(k) * k);
    for (int iv = 0; iv < n; ++iv)
        for (int iu = 0; iu < n; ++iu) {
            const Complex zeta(xs[iu], xs[iv]);
            const double wgt = ws[iu] * ws[iv];
            pows[0] = {1.0, 0.0};
            for (int j = 1; j < k; ++j) pows[j] = pows[j - 1] * zeta;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    acc[static_cast<std::size_t>(a) * k + b].add(wgt * pows[a] *
                                                                 std::conj(pows[b]));
        }
    for (std::size_t idx = 0; idx < out.monomial.size(); ++idx)
        out.monomial[idx] = acc[idx].value();

    const Complex iunit{0, 1};
    out.gram.assign(static_cast<std::size_t>(k) * k, Complex{});
    for (int m = 0; m < k; ++m)
        for (int mp = 0; mp < k; ++mp) {
            detail::Accumulator<Complex> s;
            Complex ij{1.0, 0.0};
            for (int j = 0; j <= m; ++j) {
                Complex il{1.0, 0.0};
                for (int l = 0; l <= mp; ++l) {
                    s.add(binomial(m, j) * binomial(mp, l) * ij * std::conj(il) *
                          out.q(m - j, mp - l) * out.q(j, l));
                    il *= iunit;
                }
                ij *= iunit;
            }
            out.gram[static_cast<std::size_t>(m) * k + mp] = s.value();
        }
    return out;
}

std::vector<Quaternion> bridge_sample_quaternions() {
    return {{0.40, 0.30, 0.00, 0.00}, {0.10, -0.20, 0.30, 0.00}, {0.00, 0.00, 0.50, 0.00},
            {0.20, 0.10, -0.10, 0.30}, {-0.30, 0.00, 0.00, 0.40}, {0.25, 0.25, 0.25, 0.25}};
}

std::vector<Quaternion> kernel_sample_quaternions() {
    return {{0.20, 0.10, 0.00, 0.00},  {0.00, 0.50, 0.00, 0.00},  {0.30, 0.00, 0.40, 0.00},
            {-0.20, 0.30, 0.00, 0.30}, {0.10, -0.10, 0.20, 0.00}, {0.00, 0.00, 0.00, 0.60},
            {0.50, 0.20, -0.20, 0.10}, {-0.40, 0.00, 0.30, 0.00}, {0.15, 0.25, 0.35, -0.15}};
}

std::vector<std::pair<Complex, Complex>> kernel_sample_grid() {
    std::vector<std::pair<Complex, Complex>> grid;
    const double ticks[] = {-0.6, 0.0, 0.6};
    for (double a : ticks)
        for (double b : ticks) grid.emplace_back(Complex(a, 0.25 * b), Complex(b, -0.25 * a));
    return grid;
}

// -- suites --------------------------------------------------------------------

std::vector<TransformReport> suite_isometry(const RunConfig& config) {
    const double nu = config.nu;
    const int count = 50;
    double res_b1_coeff = 0.0, res_g_coeff = 0.0, res_b1_quad = 0.0, res_g_quad = 0.0;

    const QuadratureRule line = QuadratureRule::gauss_hermite(config.quad_nodes, nu);
    const PlanarRule plane = PlanarRule::gauss(config.quad_nodes, nu);
    const QuadGram gram = a2_gram_by_quadrature(config.truncation, plane);
    const auto& ws = line.weights();
    const int n = line.size();

    for (int trial = 0; trial < count; ++trial) {
        const HermiteCoeffs f =
            random_hermite(nu, config.truncation, config.seed + 1000 + trial);

        const double nf = std::sqrt(norm_sq(f));
        res_b1_coeff =
            std::max(res_b1_coeff, std::abs(std::sqrt(norm_sq(b1_forward(f))) / nf - 1.0));
        const ASubspaceCoeffs gf = g_transform(f);
        res_g_coeff = std::max(res_g_coeff, std::abs(std::sqrt(norm_sq(gf)) / nf - 1.0));

        // quadrature path: both sides of the norm identity by quadrature
        CompensatedSum l2;
        for (int t = 0; t < n; ++t)
            l2.add(ws[t] * std::norm(hermite_synthesis(f, line.nodes()[t])));
        const double nf_quad = std::sqrt(l2.value());

        const FockCoeffs1 bf = b1_forward(f);
        const double fock = plane.integrate([&](Complex xi) { return std::norm(eval_fock1(bf, xi)); });
        res_b1_quad = std::max(res_b1_quad, std::abs(std::sqrt(fock) / nf_quad - 1.0));

        detail::Accumulator<Complex> gnorm;
        for (int m = 0; m < static_cast<int>(gf.b.size()); ++m)
            for (int mp = 0; mp < static_cast<int>(gf.b.size()); ++mp)
                gnorm.add(gf.b[m] * std::conj(gf.b[mp]) * gram.g(m, mp));
        res_g_quad =
            std::max(res_g_quad, std::abs(std::sqrt(gnorm.value().real()) / nf_quad - 1.0));
    }

    return {make_report("isometry-b1-coefficient", res_b1_coeff, kTolIsometryCoeff, config),
            make_report("isometry-g-coefficient", res_g_coeff, kTolIsometryCoeff, config),
            make_report("isometry-b1-quadrature", res_b1_quad, config.tolerance, config),
            make_report("isometry-g-quadrature", res_g_quad, config.tolerance, config)};
}

std::vector<TransformReport> suite_factorization(const RunConfig& config) {
    const double nu = config.nu;
    const std::vector<Complex> grid = default_complex_grid();
    double res = 0.0;
    for (int m = 0; m <= 8; ++m) {
        HermiteCoeffs f;
        f.nu = nu;
        f.c.assign(m + 1, Complex{});
        f.c[m] = 1.0;
        res = std::max(res, g_factorization_residual(f, grid, grid, config.quad_nodes));
    }
    for (int trial = 0; trial < 3; ++trial) {
        const HermiteCoeffs f =
            random_hermite(nu, std::min(config.truncation, 12), config.seed + 2000 + trial);
        res = std::max(res, g_factorization_residual(f, grid, grid, config.quad_nodes));
    }
    return {make_report("factorization-grid", res, config.tolerance, config)};
}

std::vector<TransformReport> suite_image(const RunConfig& config) {
    const double nu = config.nu;
    const int top = std::min(16, config.truncation);

    double res_annihilation = 0.0;
    for (int m = 0; m <= top; ++m) {
        HermiteCoeffs f;
        f.nu = nu;
        f.c.assign(m + 1, Complex{});
        f.c[m] = 1.0;
        const FockCoeffs2 embedded = a_subspace_embed(g_transform(f));
        double scale = 0.0;
        for (const Complex& v : embedded.a) scale = std::max(scale, std::abs(v));
        res_annihilation = std::max(res_annihilation, dzw_residual(embedded) / scale);
    }

    const PlanarRule plane = PlanarRule::gauss(config.quad_nodes, nu);
    const QuadGram gram = a2_gram_by_quadrature(top, plane);
    double res_gram = 0.0;
    for (int m = 0; m <= top; ++m) {
        const double expected = a2_basis_norm_sq(m, nu);
        res_gram = std::max(res_gram, std::abs(gram.g(m, m).real() / expected - 1.0));
        res_gram = std::max(res_gram, std::abs(gram.g(m, m).imag()) / expected);
        for (int mp = 0; mp < m; ++mp) {
            const double denom =
                std::sqrt(a2_basis_norm_sq(m, nu) * a2_basis_norm_sq(mp, nu));
            res_gram = std::max(res_gram, std::abs(gram.g(m, mp)) / denom);
        }
    }

    return {make_report("image-annihilation", res_annihilation, kTolImageAnnihilation, config),
            make_report("image-gram-diagonal", res_gram, config.tolerance, config)};
}

std::vector<TransformReport> suite_left_inverse(const RunConfig& config) {
    const double nu = config.nu;

    double res_roundtrip = 0.0;
    for (int m = 0; m <= std::min(16, config.truncation); ++m) {
        HermiteCoeffs f;
        f.nu = nu;
        f.c.assign(m + 1, Complex{});
        f.c[m] = 1.0;
        const HermiteCoeffs back = r_transform(a_subspace_embed(g_transform(f)));
        res_roundtrip = std::max(res_roundtrip, max_coeff_diff(back.c, f.c));
    }
    for (int trial = 0; trial < 8; ++trial) {
        const HermiteCoeffs f =
            random_hermite(nu, std::min(16, config.truncation), config.seed + 3000 + trial);
        const HermiteCoeffs back = r_transform(a_subspace_embed(g_transform(f)));
        res_roundtrip = std::max(res_roundtrip, max_coeff_diff(back.c, f.c));
    }

    // fitted prefactor of the explicit inverse integral
    const PlanarRule plane = PlanarRule::gauss(config.quad_nodes, nu);
    const HermiteCoeffs f = random_hermite(nu, 8, config.seed + 3100);
    const FockCoeffs2 F = a_subspace_embed(g_transform(f));
    const HermiteCoeffs exact = r_transform(F);
    const double xs[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    double num = 0.0, den = 0.0;
    for (double x : xs) {
        const Complex quad = r_transform_quad_unnormalized(F, plane, x);
        const Complex coeff = hermite_synthesis(exact, x);
        num += (std::conj(quad) * coeff).real();
        den += std::norm(quad);
    }
    const double fitted = num / den;
    const double derived = std::pow(nu / kPi, 0.25);
    const double printed = std::pow(kPi / nu, 0.25);

    TransformReport roundtrip =
        make_report("left-inverse-roundtrip", res_roundtrip, kTolLeftInverse, config);
    TransformReport prefactor = make_report(
        "left-inverse-prefactor", std::abs(fitted / derived - 1.0), kTolPrefactor, config);
    prefactor.constants["fitted"] = fitted;
    prefactor.constants["derived_nu_over_pi_quarter"] = derived;
    prefactor.constants["printed_pi_over_nu_quarter"] = printed;
    return {roundtrip, prefactor};
}

std::vector<TransformReport> suite_quaternionic_roundtrip(const RunConfig& config) {
    const double nu = config.nu;
    const int top = std::min(12, config.truncation);

    double res_roundtrip = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const HermiteCoeffsQ f = random_hermite_q(nu, top, config.seed + 4000 + trial);
        const HermiteCoeffsQ back = bh_inverse(bh_forward(f));
        res_roundtrip = std::max(res_roundtrip, max_coeff_diff_q(back.c, f.c));
    }

    const SliceRegularSeries F = random_slice_series(nu, top, config.seed + 4100);
    const PlanarRule plane = PlanarRule::gauss(config.quad_nodes, nu);
    const QuadratureRule line = QuadratureRule::gauss_hermite(config.quad_nodes, nu);
    const HermiteCoeffsQ via_i = bh_inverse_quad(F, ImaginaryUnit::i(), plane, line, top);
    const HermiteCoeffsQ via_j = bh_inverse_quad(F, ImaginaryUnit::j(), plane, line, top);
    const double res_slice = max_coeff_diff_q(via_i.c, via_j.c);

    TransformReport slice_rep =
        make_report("bh-inverse-slice-independence", res_slice, kTolSliceIndependence, config);
    slice_rep.constants["quad_vs_coefficient"] = max_coeff_diff_q(via_i.c, bh_inverse(F).c);

    return {make_report("bh-roundtrip-coefficient", res_roundtrip, kTolQuatRoundtrip, config),
            slice_rep};
}

std::vector<TransformReport> suite_bridge(const RunConfig& config) {
    const double nu = config.nu;
    const PlanarRule plane = PlanarRule::gauss(config.quad_nodes, nu);
    const std::vector<Quaternion> qs = bridge_sample_quaternions();

    double res_dual = 0.0;
    double res_invariance = 0.0;
    for (int trial = 0; trial < 2; ++trial) {
        const FockCoeffs2 F = random_fock2(nu, 5, 5, config.seed + 5000 + trial);
        const SliceRegularSeries series = i_transform(F);
        res_invariance = std::max(res_invariance, slice_invariant(series).defect);
        for (const Quaternion& q : qs) {
            const Quaternion coeff_path = series_eval(series, q);
            const Quaternion quad_path = i_transform_quad(F, plane, q);
            res_dual = std::max(res_dual, (coeff_path - quad_path).norm());
        }
    }

    double res_ji = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        const ASubspaceCoeffs F = random_a2(nu, config.truncation, config.seed + 5100 + trial);
        res_ji = std::max(res_ji, ji_roundtrip_residual(F));
    }
    for (int m = 0; m <= std::min(12, config.truncation); ++m) {
        ASubspaceCoeffs F;
        F.nu = nu;
        F.b.assign(m + 1, Complex{});
        F.b[m] = 1.0;
        res_ji = std::max(res_ji, ji_roundtrip_residual(F));
    }

    const double bridge_fit =
        i_bridge_prefactor_fit(random_fock2(nu, 5, 5, config.seed + 5200));

    TransformReport ji = make_report("bridge-ji-roundtrip", res_ji, kTolJiRoundtrip, config);
    ji.constants["i_vs_bh_r_prefactor_fitted"] = bridge_fit;
    ji.constants["i_vs_bh_r_prefactor_derived"] = std::sqrt(kPi / nu);

    return {make_report("bridge-i-dual-path", res_dual, kTolBridgeDualPath, config),
            make_report("bridge-image-slice-invariant", res_invariance, kTolSliceInvariance,
                        config),
            ji};
}

std::vector<TransformReport> suite_kernel_identities(const RunConfig& config) {
    const double nu = config.nu;
    // section truncation follows the configured truncation; the fit constant
    // is tail-limited, so sweeps over the truncation expose the series tail
    const int trunc = config.truncation;
    const std::vector<Quaternion> qs = kernel_sample_quaternions();
    const auto grid = kernel_sample_grid();

    double res_ik = 0.0, kappa_ik = 0.0;
    const std::pair<Complex, Complex> zw_samples[] = {
        {Complex(0.0, 0.0), Complex(0.0, 0.0)},
        {Complex(0.3, -0.1), Complex(0.5, 0.2)},
        {Complex(-0.4, 0.2), Complex(0.1, 0.3)}};
    for (const auto& [z, w] : zw_samples) {
        const KernelFit fit = ikernel_residual(z, w, qs, nu, trunc);
        res_ik = std::max(res_ik, fit.residual);
        kappa_ik = fit.kappa;  // same scalar at every section
    }

    double res_ck = 0.0, kappa_ck = 0.0;
    bool holo = true;
    const Complex xi_samples[] = {{0.0, 0.0}, {0.6, -0.2}, {-0.3, 0.5}};
    for (const Complex& xi : xi_samples) {
        const KernelFit fit = ckernel_residual(xi, grid, nu, trunc);
        res_ck = std::max(res_ck, fit.residual);
        kappa_ck = fit.kappa;
        holo = holo && fit.second_slot_holomorphic;
    }

    TransformReport ik = make_report("ikernel-postfit", res_ik, config.tolerance, config);
    ik.constants["kappa_fitted"] = kappa_ik;
    ik.constants["kappa_resolved_nu_over_pi"] = nu / kPi;

    TransformReport ik_kappa = make_report(
        "ikernel-kappa", std::abs(kappa_ik / (nu / kPi) - 1.0), config.tolerance, config);
    ik_kappa.constants["kappa_fitted"] = kappa_ik;
    ik_kappa.constants["kappa_resolved_nu_over_pi"] = nu / kPi;

    TransformReport ck = make_report("ckernel-postfit", res_ck, config.tolerance, config);
    ck.constants["kappa_fitted"] = kappa_ck;
    ck.constants["kappa_resolved_sqrt_pi_over_nu"] = std::sqrt(kPi / nu);
    ck.constants["second_slot_holomorphic"] = holo ? 1.0 : 0.0;

    TransformReport ck_kappa =
        make_report("ckernel-kappa", std::abs(kappa_ck / std::sqrt(kPi / nu) - 1.0),
                    config.tolerance, config);
    ck_kappa.constants["kappa_fitted"] = kappa_ck;
    ck_kappa.constants["kappa_resolved_sqrt_pi_over_nu"] = std::sqrt(kPi / nu);

    std::vector<TransformReport> reports{ik, ik_kappa, ck, ck_kappa};
    if (std::abs(nu - kPi) <= 1e-9) {
        const double dev = std::max(std::abs(kappa_ik - 1.0), std::abs(kappa_ck - 1.0));
        reports.push_back(make_report("kernel-kappa-at-pi", dev, kTolKappaAtPi, config));
    }
    return reports;
}

std::vector<TransformReport> suite_fourier(const RunConfig& config) {
    const double nu = config.nu;
    const int top = std::min(12, config.truncation);

    double res_fourth = 0.0, res_parity = 0.0, res_intertwine = 0.0;
    double res_t1 = 0.0, res_t2 = 0.0, res_t2_proj = 0.0;
    double res_id = 0.0, res_gamma = 0.0;

    const PlanarRule plane = PlanarRule::gauss(config.quad_nodes, nu);

    for (int trial = 0; trial < 6; ++trial) {
        const HermiteCoeffs f = random_hermite(nu, top, config.seed + 6000 + trial);
        const SignChoice sign = trial % 2 == 0 ? SignChoice::minus : SignChoice::plus;

        HermiteCoeffs four = f;
        for (int k = 0; k < 4; ++k) four = fourier_rescaled(four, sign);
        res_fourth = std::max(res_fourth, max_coeff_diff(four.c, f.c));

        HermiteCoeffs twice = fourier_rescaled(fourier_rescaled(f, sign), sign);
        HermiteCoeffs parity = f;
        for (std::size_t m = 1; m < parity.c.size(); m += 2) parity.c[m] = -parity.c[m];
        res_parity = std::max(res_parity, max_coeff_diff(twice.c, parity.c));

        const FockCoeffs1 F1 = b1_forward(f);
        res_intertwine = std::max(
            res_intertwine,
            max_coeff_diff(fourier_rescaled(b1_inverse(F1), sign).c,
                           b1_inverse(gamma_dilation(sign_unit(sign), F1)).c));

        res_t1 = std::max(res_t1, max_coeff_diff(t1_transform(F1, sign).b,
                                                 t1_via_definition(F1, sign).b));

        const FockCoeffs2 F2 = random_fock2(nu, top / 2 + 1, top / 2 + 1,
                                            config.seed + 6100 + trial);
        res_t2 = std::max(res_t2, max_coeff_diff(t2_transform(F2, sign).a,
                                                 t2_via_definition(F2, sign).a));

        // opposite signs give the identity, equal signs give the parity dilation
        const SignChoice other = sign == SignChoice::minus ? SignChoice::plus : SignChoice::minus;
        const FockCoeffs1 id_path = t2_transform(a_subspace_embed(t1_transform(F1, sign)), other);
        res_id = std::max(res_id, max_coeff_diff(id_path.a, F1.a));
        const FockCoeffs1 gamma_path =
            t2_transform(a_subspace_embed(t1_transform(F1, sign)), sign);
        res_gamma = std::max(res_gamma,
                             max_coeff_diff(gamma_path.a, gamma_dilation(-1.0, F1).a));
    }

    {
        const FockCoeffs2 F2 = random_fock2(nu, 5, 5, config.seed + 6200);
        res_t2_proj = max_coeff_diff(t2_via_projection(F2, SignChoice::minus, plane).a,
                                     t2_transform(F2, SignChoice::minus).a);
    }

    return {make_report("fourier-fourth-power", res_fourth, kTolExactCoeff, config),
            make_report("fourier-parity-square", res_parity, kTolExactCoeff, config),
            make_report("fourier-intertwining", res_intertwine, kTolExactCoeff, config),
            make_report("t1-definition-vs-closed", res_t1, kTolFourierClosed, config),
            make_report("t2-definition-vs-closed", res_t2, kTolFourierClosed, config),
            make_report("t2-projection-route", res_t2_proj, config.tolerance, config),
            make_report("t2-t1-opposite-identity", res_id, kTolFourierComposition, config),
            make_report("t2-t1-same-parity", res_gamma, kTolFourierComposition, config)};
}

std::vector<TransformReport> suite_appendix_constant(const RunConfig& config) {
    const double nu = config.nu;

    std::vector<TransformReport> reports;
    double kappa2_fitted = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const double fitted = gk_constant(k, nu);
        const double derived = gk_constant_derived(k, nu);
        if (k == 2) kappa2_fitted = fitted;
        TransformReport rep = make_report("appendix-kappa-" + std::to_string(k),
                                          std::abs(fitted / derived - 1.0),
                                          k == 1 ? kTolExactCoeff : kTolAppendixKappa, config);
        rep.constants["kappa_fitted"] = fitted;
        rep.constants["kappa_derived"] = derived;
        rep.constants["kappa_printed"] = gk_constant_printed(k, nu);
        reports.push_back(rep);
    }

    // psi_2 factors through pairwise psi_1 composition
    double res_psi = 0.0;
    Uniform rng(config.seed + 7000);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> Z(4);
        for (Complex& z : Z) z = rng.next_complex();
        const Complex direct = psi_k_eval(Z, 2);
        const Complex pair1 = SymbolMap::psi1().map_to_line(Z[0], Z[1]);
        const Complex pair2 = SymbolMap::psi1().map_to_line(Z[2], Z[3]);
        const Complex composed = SymbolMap::psi1().map_to_line(pair1, pair2);
        res_psi = std::max(res_psi, std::abs(direct - composed));
    }
    reports.push_back(make_report("appendix-psi2-factorization", res_psi, 1e-14, config));

    // the claim constant mismatches the derived one by (nu/pi)^{(2^k+2)/4}
    {
        const double ratio = gk_constant_printed(2, nu) / gk_constant_derived(2, nu);
        const double expected_ratio = std::pow(nu / kPi, 1.5);
        double residual = std::abs(ratio / expected_ratio - 1.0);
        // away from nu = pi the mismatch must actually be visible
        if (std::abs(nu - kPi) > 1e-6 && std::abs(ratio - 1.0) < 1e-12) residual = 1.0;
        TransformReport rep = make_report("appendix-printed-constant-flag", residual,
                                          kTolAppendixKappa, config);
        rep.constants["printed_over_derived"] = ratio;
        rep.constants["kappa2_fitted"] = kappa2_fitted;
        reports.push_back(rep);
    }
    return reports;
}

std::vector<TransformReport> suite_reproducing_kernels(const RunConfig& config) {
    const double nu = config.nu;
    const PlanarRule plane = PlanarRule::gauss(config.quad_nodes, nu);

    const Complex xi_samples[] = {{0.8, 0.0}, {-0.5, 0.6}, {0.7, 0.7}};
    double res_k1 = 0.0;
    for (int m = 0; m <= 6; ++m)
        for (const Complex& xi : xi_samples) {
            const Complex got = plane.integrate([&](Complex zeta) {
                return std::pow(zeta, m) * std::conj(kernel_K1(zeta, xi, nu));
            });
            const Complex want = std::pow(xi, m);
            res_k1 = std::max(res_k1, std::abs(got - want) / std::abs(want));
        }

    double res_k2 = 0.0;
    const std::pair<Complex, Complex> uv_samples[] = {
        {Complex(0.8, 0.1), Complex(-0.6, 0.4)}, {Complex(-0.7, -0.5), Complex(0.9, 0.2)}};
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (const auto& [u, v] : uv_samples) {
                const double c = nu / kPi;
                const Complex gz = plane.integrate([&](Complex z) {
                    return std::pow(z, m) * c * std::exp(nu * std::conj(z) * u);
                });
                const Complex gw = plane.integrate([&](Complex w) {
                    return std::pow(w, n) * c * std::exp(nu * std::conj(w) * v);
                });
                const Complex want = std::pow(u, m) * std::pow(v, n);
                res_k2 = std::max(res_k2, std::abs(gz * gw - want) / std::abs(want));
            }

    double res_kh = 0.0;
    const Quaternion p_samples[] = {
        {0.5, 0.4, 0.0, 0.0}, {0.3, -0.2, 0.5, 0.1}, {0.0, 0.0, 0.8, 0.0}};
    const ImaginaryUnit slice_i = ImaginaryUnit::i();
    for (int m = 0; m <= 6; ++m)
        for (const Quaternion& p : p_samples) {
            const Quaternion got = plane.integrate([&](Complex s) {
                const Quaternion q = slice_i.embed(s);
                Complex spow{1.0, 0.0};
                for (int j = 0; j < m; ++j) spow *= s;
                return kernel_KH(q, p, nu).conj() * slice_i.embed(spow);
            });
            Quaternion want{1.0, 0.0, 0.0, 0.0};
            for (int j = 0; j < m; ++j) want = want * p;
            res_kh = std::max(res_kh, (got - want).norm() / want.norm());
        }

    return {make_report("k1-reproducing", res_k1, config.tolerance, config),
            make_report("k2-reproducing", res_k2, config.tolerance, config),
            make_report("kh-reproducing", res_kh, config.tolerance, config)};
}

}  // namespace

void RunConfig::validate() const {
    if (!(nu > 0.0)) throw std::invalid_argument("config: nu must be positive");
    if (truncation < 1) throw std::invalid_argument("config: truncation must be >= 1");
    if (quad_nodes < 1) throw std::invalid_argument("config: quad_nodes must be >= 1");
    if (!(tolerance > 0.0)) throw std::invalid_argument("config: tolerance must be positive");
    for (const std::string& s : suites)
        if (!is_suite_name(s)) throw std::invalid_argument("config: unknown suite '" + s + "'");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "isometry",      "factorization",          "image",
        "left-inverse",  "quaternionic-roundtrip", "bridge",
        "kernel-identities", "fourier",            "appendix-constant",
        "reproducing-kernels"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end() || name == "all";
}

std::vector<TransformReport> run_suite(const std::string& name, const RunConfig& config) {
    if (name == "isometry") return suite_isometry(config);
    if (name == "factorization") return suite_factorization(config);
    if (name == "image") return suite_image(config);
    if (name == "left-inverse") return suite_left_inverse(config);
    if (name == "quaternionic-roundtrip") return suite_quaternionic_roundtrip(config);
    if (name == "bridge") return suite_bridge(config);
    if (name == "kernel-identities") return suite_kernel_identities(config);
    if (name == "fourier") return suite_fourier(config);
    if (name == "appendix-constant") return suite_appendix_constant(config);
    if (name == "reproducing-kernels") return suite_reproducing_kernels(config);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport run_verification(const RunConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::string> selected = config.suites;
    if (selected.empty() ||
        std::find(selected.begin(), selected.end(), "all") != selected.end())
        selected = suite_names();

    SuiteReport report;
    report.version = kVersion;
    report.config = config;
    report.pass = true;
    for (const std::string& name : selected) {
        SuiteResult result;
        result.name = name;
        result.reports = run_suite(name, config);
        result.pass = std::all_of(result.reports.begin(), result.reports.end(),
                                  [](const TransformReport& r) { return r.pass; });
        report.pass = report.pass && result.pass;
        report.suites.push_back(std::move(result));
    }

    // the fitted-constant ledger, always resolved
    {
        const double nu = config.nu;
        RunConfig small = config;
        small.quad_nodes = std::max(48, std::min(config.quad_nodes, 64));
        const PlanarRule plane = PlanarRule::gauss(small.quad_nodes, nu);
        const HermiteCoeffs f = random_hermite(nu, 6, config.seed + 9000);
        const FockCoeffs2 F = a_subspace_embed(g_transform(f));
        const HermiteCoeffs exact = r_transform(F);
        double num = 0.0, den = 0.0;
        for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const Complex quad = r_transform_quad_unnormalized(F, plane, x);
            num += (std::conj(quad) * hermite_synthesis(exact, x)).real();
            den += std::norm(quad);
        }
        report.resolved_constants["inversea_prefactor"] = num / den;
        report.resolved_constants["ikernel_kappa"] =
            ikernel_residual(Complex(0.3, -0.1), Complex(0.5, 0.2),
                             kernel_sample_quaternions(), nu, 28)
                .kappa;
        report.resolved_constants["ckernel_kappa"] =
            ckernel_residual(Complex(0.6, -0.2), kernel_sample_grid(), nu, 28).kappa;
        report.resolved_constants["appendix_kappa_2"] = gk_constant(2, nu);
    }

    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

HermiteCoeffs random_hermite(double nu, int max_index, std::uint64_t seed) {
    Uniform rng(seed);
    HermiteCoeffs f;
    f.nu = nu;
    f.c.resize(max_index + 1);
    for (int m = 0; m <= max_index; ++m)
        f.c[m] = rng.next_complex() / std::sqrt(factorial(std::min(m, 170)));
    return f;
}

HermiteCoeffsQ random_hermite_q(double nu, int max_index, std::uint64_t seed) {
    Uniform rng(seed);
    HermiteCoeffsQ f;
    f.nu = nu;
    f.c.resize(max_index + 1);
    for (int m = 0; m <= max_index; ++m) {
        const double s = 1.0 / std::sqrt(factorial(std::min(m, 170)));
        f.c[m] = Quaternion(rng.next() * s, rng.next() * s, rng.next() * s, rng.next() * s);
    }
    return f;
}

FockCoeffs2 random_fock2(double nu, int rows, int cols, std::uint64_t seed) {
    Uniform rng(seed);
    FockCoeffs2 f = FockCoeffs2::zero(nu, rows, cols);
    for (int m = 0; m < rows; ++m)
        for (int n = 0; n < cols; ++n)
            f.at(m, n) = rng.next_complex() / std::sqrt(factorial(std::min(m + n, 170)));
    return f;
}

ASubspaceCoeffs random_a2(double nu, int max_index, std::uint64_t seed) {
    Uniform rng(seed);
    ASubspaceCoeffs f;
    f.nu = nu;
    f.b.resize(max_index + 1);
    for (int m = 0; m <= max_index; ++m)
        f.b[m] = rng.next_complex() / std::sqrt(factorial(std::min(m, 170)));
    return f;
}

SliceRegularSeries random_slice_series(double nu, int max_index, std::uint64_t seed) {
    Uniform rng(seed);
    SliceRegularSeries f;
    f.nu = nu;
    f.c.resize(max_index + 1);
    for (int m = 0; m <= max_index; ++m) {
        const double s = 1.0 / std::sqrt(factorial(std::min(m, 170)));
        f.c[m] = Quaternion(rng.next() * s, rng.next() * s, rng.next() * s, rng.next() * s);
    }
    return f;
}

namespace {

json report_to_json(const TransformReport& r) {
    json j;
    j["identity"] = r.identity;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["quad_nodes"] = r.quad_nodes;
    j["truncation"] = r.truncation;
    j["constants"] = r.constants;
    return j;
}

json config_to_json(const RunConfig& c) {
    json j;
    j["nu"] = c.nu;
    j["truncation"] = c.truncation;
    j["quad_nodes"] = c.quad_nodes;
    j["tolerance"] = c.tolerance;
    j["seed"] = c.seed;
    j["suites"] = c.suites;
    return j;
}

}  // namespace

std::string to_json_string(const TransformReport& report, int indent) {
    return report_to_json(report).dump(indent);
}

std::string to_json_string(const SuiteReport& report, int indent) {
    json j;
    j["version"] = report.version;
    j["config"] = config_to_json(report.config);
    j["pass"] = report.pass;
    j["wall_time_ms"] = report.wall_time_ms;
    j["resolved_constants"] = report.resolved_constants;
    json suites = json::array();
    for (const SuiteResult& s : report.suites) {
        json sj;
        sj["name"] = s.name;
        sj["pass"] = s.pass;
        json reports = json::array();
        for (const TransformReport& r : s.reports) reports.push_back(report_to_json(r));
        sj["reports"] = reports;
        suites.push_back(sj);
    }
    j["suites"] = suites;
    return j.dump(indent);
}

std::string run_config_to_json(const RunConfig& config, int indent) {
    return config_to_json(config).dump(indent);
}

RunConfig run_config_from_json(const std::string& text, RunConfig base) {
    const json j = json::parse(text);
    if (j.contains("nu")) base.nu = j.at("nu").get<double>();
    if (j.contains("truncation")) base.truncation = j.at("truncation").get<int>();
    if (j.contains("quad_nodes")) base.quad_nodes = j.at("quad_nodes").get<int>();
    if (j.contains("tolerance")) base.tolerance = j.at("tolerance").get<double>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("suites")) base.suites = j.at("suites").get<std::vector<std::string>>();
    return base;
}

}  // namespace bargmann
