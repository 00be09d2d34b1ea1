#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bargmann/hermite.hpp"
#include "bargmann/quadrature.hpp"
#include "bargmann/spaces.hpp"
#include "bargmann/transforms.hpp"
#include "bargmann/verification.hpp"

using namespace bargmann;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("hermite polynomials: base cases and Rodrigues expansions") {
    CHECK(hermite_eval(0, 0.7, 1.3) == 1.0);
    CHECK(hermite_eval(1, 1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(hermite_eval(2, 1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));

    // Rodrigues differentiation gives H_3 = 8 nu^3 x^3 - 12 nu^2 x and
    // H_4 = 16 nu^4 x^4 - 48 nu^3 x^2 + 12 nu^2.
    for (double nu : {0.5, 1.0, 2.0})
        for (double x : {-1.3, -0.2, 0.4, 1.9}) {
            const double h3 = 8 * std::pow(nu, 3) * std::pow(x, 3) - 12 * nu * nu * x;
            const double h4 = 16 * std::pow(nu, 4) * std::pow(x, 4) -
                              48 * std::pow(nu, 3) * x * x + 12 * nu * nu;
            CHECK(hermite_eval(3, nu, x) == doctest::Approx(h3).epsilon(1e-13));
            CHECK(hermite_eval(4, nu, x) == doctest::Approx(h4).epsilon(1e-13));
        }
}

TEST_CASE("hermite norms match the quadrature oracle") {
    for (double nu : {0.5, 1.0, 2.0}) {
        const QuadratureRule rule = QuadratureRule::gauss_hermite(64, nu);
        for (int m = 0; m <= 8; ++m) {
            const double quad = rule.integrate([&](double x) {
                const double h = hermite_eval(m, nu, x);
                return h * h;
            });
            CHECK(hermite_norm_sq(m, nu) == doctest::Approx(quad).epsilon(1e-12));
        }
    }
    CHECK(hermite_norm_sq(0, 1.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
    CHECK(hermite_norm_sq(1, 1.0) == doctest::Approx(2 * std::sqrt(kPi)).epsilon(1e-15));
    CHECK(hermite_norm_sq(3, 2.0) ==
          doctest::Approx(8.0 * 6.0 * std::pow(2.0, 2.5) * std::sqrt(kPi)).epsilon(1e-14));
}

TEST_CASE("fock norms and inner products") {
    for (double nu : {0.5, 1.0, 2.0}) {
        CHECK(fock1_norm_sq(0, nu) == doctest::Approx(kPi / nu).epsilon(1e-15));
        const PlanarRule rule = PlanarRule::gauss(48, nu);
        for (int m = 0; m <= 6; ++m) {
            const Complex quad =
                rule.integrate([&](Complex z) { return std::pow(std::abs(z), 2 * m); });
            CHECK(fock1_norm_sq(m, nu) == doctest::Approx(quad.real()).epsilon(1e-12));
        }
    }
    // <e_2, e_2> at nu = 1 is pi * 2! = 2 pi
    CHECK(fock1_norm_sq(2, 1.0) == doctest::Approx(2 * kPi).epsilon(1e-14));

    FockCoeffs1 f, g;
    f.nu = g.nu = 1.0;
    f.a = {0.0, Complex(1, 0)};
    g.a = {0.0, 0.0, Complex(0, 1)};
    CHECK(std::abs(fock1_inner(f, g)) == 0.0);  // distinct monomials are orthogonal
    g.nu = 2.0;
    CHECK_THROWS_AS(fock1_inner(f, g), std::invalid_argument);

    FockCoeffs2 a = FockCoeffs2::zero(1.0, 2, 2);
    FockCoeffs2 b = FockCoeffs2::zero(2.0, 2, 2);
    CHECK_THROWS_AS(fock2_inner(a, b), std::invalid_argument);
}

TEST_CASE("a2 basis norms match the product-rule quadrature oracle") {
    for (double nu : {0.5, 1.0, 2.0}) {
        const PlanarRule rule = PlanarRule::gauss(32, nu);
        const Complex iunit{0, 1};
        for (int m = 0; m <= 5; ++m) {
            // || (z+iw)^m ||^2 expanded binomially into products of planar
            // monomial integrals, each evaluated by quadrature
            detail::Accumulator<Complex> acc;
            for (int j = 0; j <= m; ++j)
                for (int l = 0; l <= m; ++l) {
                    const Complex qz = rule.integrate([&](Complex z) {
                        return std::pow(z, m - j) * std::pow(std::conj(z), m - l);
                    });
                    const Complex qw = rule.integrate([&](Complex w) {
                        return std::pow(w, j) * std::pow(std::conj(w), l);
                    });
                    acc.add(binomial(m, j) * binomial(m, l) * std::pow(iunit, j) *
                            std::pow(std::conj(iunit), l) * qz * qw);
                }
            CHECK(a2_basis_norm_sq(m, nu) ==
                  doctest::Approx(acc.value().real()).epsilon(1e-11));
        }
    }
}

TEST_CASE("reproducing kernels: special values and reproduction") {
    const double nu = 1.7;
    CHECK(kernel_K1(Complex(2.3, -0.7), Complex(0, 0), nu) ==
          Complex(nu / kPi, 0.0));
    CHECK(kernel_K2(Complex(0, 0), Complex(0, 0), Complex(1.1, 0.3), Complex(-0.2, 2.0), nu) ==
          Complex(nu * nu / (kPi * kPi), 0.0));

    // pairing K_1(xi, .) against e_2 returns xi^2
    const PlanarRule rule = PlanarRule::gauss(96, nu);
    const Complex xi(0.8, -0.4);
    const Complex got = rule.integrate(
        [&](Complex z) { return z * z * std::conj(kernel_K1(z, xi, nu)); });
    CHECK(std::abs(got - xi * xi) / std::abs(xi * xi) <= 1e-8);
}

TEST_CASE("projection onto the holomorphic Fock space") {
    const double nu = 1.25;
    const PlanarRule rule = PlanarRule::gauss(64, nu);

    // fixes holomorphic monomials
    for (int m = 0; m <= 4; ++m) {
        const FockCoeffs1 p =
            proj_fock1([&](Complex z) { return std::pow(z, m); }, nu, rule, 6);
        for (int j = 0; j <= 6; ++j)
            CHECK(std::abs(p.a[j] - (j == m ? Complex(1, 0) : Complex{})) <= 1e-11);
    }

    // annihilates the anti-holomorphic coordinate
    const FockCoeffs1 anti =
        proj_fock1([](Complex z) { return std::conj(z); }, nu, rule, 6);
    for (const Complex& a : anti.a) CHECK(std::abs(a) <= 1e-12);

    // |z|^2 projects to the constant 1/nu
    const FockCoeffs1 sq =
        proj_fock1([](Complex z) { return Complex(std::norm(z), 0.0); }, nu, rule, 6);
    CHECK(std::abs(sq.a[0] - Complex(1.0 / nu, 0.0)) <= 1e-12);
    for (std::size_t j = 1; j < sq.a.size(); ++j) CHECK(std::abs(sq.a[j]) <= 1e-12);

    // idempotent on mixed polynomials of degree <= 12
    const auto mixed = [](Complex z) {
        const Complex zb = std::conj(z);
        return 0.3 * std::pow(z, 5) * std::pow(zb, 4) - Complex(0, 1.2) * std::pow(zb, 6) +
               std::pow(z, 3) + 2.0;
    };
    const FockCoeffs1 once = proj_fock1(mixed, nu, rule, 12);
    const FockCoeffs1 twice =
        proj_fock1([&](Complex z) { return eval_fock1(once, z); }, nu, rule, 12);
    for (int j = 0; j <= 12; ++j) CHECK(std::abs(once.a[j] - twice.a[j]) <= 1e-10);

    // the coefficient overload is exactly the identity
    const FockCoeffs1 fixed = proj_fock1(once);
    for (int j = 0; j <= 12; ++j) CHECK(fixed.a[j] == once.a[j]);
}

TEST_CASE("annihilation operator d/dz + i d/dw in coefficient space") {
    const double nu = 1.0;

    // (z + iw)^m lies in the kernel, exactly
    for (int m = 0; m <= 10; ++m) {
        ASubspaceCoeffs b;
        b.nu = nu;
        b.b.assign(m + 1, Complex{});
        b.b[m] = Complex(0.7, -0.3);
        const FockCoeffs2 embedded = a_subspace_embed(b);
        double scale = 0.0;
        for (const Complex& v : embedded.a) scale = std::max(scale, std::abs(v));
        CHECK(dzw_residual(embedded) <= 1e-14 * scale);
    }

    // D z = 1 and D w = i
    FockCoeffs2 z = FockCoeffs2::zero(nu, 2, 2);
    z.at(1, 0) = 1.0;
    const FockCoeffs2 dz = dzw_apply(z);
    CHECK(dz.at(0, 0) == Complex(1, 0));

    FockCoeffs2 w = FockCoeffs2::zero(nu, 2, 2);
    w.at(0, 1) = 1.0;
    const FockCoeffs2 dw = dzw_apply(w);
    CHECK(dw.at(0, 0) == Complex(0, 1));
}

TEST_CASE("subspace embedding and extraction") {
    const double nu = 0.8;

    ASubspaceCoeffs delta1;
    delta1.nu = nu;
    delta1.b = {Complex{}, Complex(1, 0)};
    const FockCoeffs2 e = a_subspace_embed(delta1);
    CHECK(e.at(1, 0) == Complex(1, 0));
    CHECK(e.at(0, 1) == Complex(0, 1));
    CHECK(e.at(0, 0) == Complex{});

    for (int trial = 0; trial < 5; ++trial) {
        const ASubspaceCoeffs b = random_a2(nu, 12, 100 + trial);
        const ASubspaceCoeffs back = a_subspace_extract(a_subspace_embed(b));
        REQUIRE(back.b.size() == b.b.size());
        for (std::size_t m = 0; m < b.b.size(); ++m)
            CHECK(std::abs(back.b[m] - b.b[m]) <= 1e-14);
    }

    FockCoeffs2 z = FockCoeffs2::zero(nu, 2, 2);
    z.at(1, 0) = 1.0;  // D z = 1, not in the subspace
    CHECK_THROWS_AS(a_subspace_extract(z), NotInSubspaceError);
    try {
        a_subspace_extract(z);
    } catch (const NotInSubspaceError& err) {
        CHECK(err.residual() == doctest::Approx(1.0));
    }
}

TEST_CASE("coefficient norms equal quadrature norms") {
    for (double nu : {0.5, 2.0}) {
        const HermiteCoeffs f = random_hermite(nu, 16, 55);
        const QuadratureRule rule = QuadratureRule::gauss_hermite(96, nu);
        const double quad =
            rule.integrate([&](double x) { return std::norm(hermite_synthesis(f, x)); });
        CHECK(norm_sq(f) == doctest::Approx(quad).epsilon(1e-9));

        const FockCoeffs1 F = b1_forward(f);
        const PlanarRule plane = PlanarRule::gauss(96, nu);
        const double quad2 =
            plane.integrate([&](Complex xi) { return std::norm(eval_fock1(F, xi)); });
        CHECK(norm_sq(F) == doctest::Approx(quad2).epsilon(1e-9));
    }
}

TEST_CASE("pairings against the subspace basis separate kernel elements") {
    const double nu = 1.0;
    for (int trial = 0; trial < 5; ++trial) {
        const ASubspaceCoeffs b = random_a2(nu, 10, 200 + trial);
        const FockCoeffs2 F = a_subspace_embed(b);
        double largest = 0.0;
        for (int k = 0; k <= 10; ++k) {
            ASubspaceCoeffs basis;
            basis.nu = nu;
            basis.b.assign(k + 1, Complex{});
            basis.b[k] = 1.0;
            const Complex pairing = fock2_inner(F, a_subspace_embed(basis));
            // diagonality: <F, e_k> = b_k ||e_k||^2
            CHECK(std::abs(pairing - b.b[k] * a2_basis_norm_sq(k, nu)) <=
                  1e-10 * a2_basis_norm_sq(k, nu));
            largest = std::max(largest, std::abs(pairing));
        }
        CHECK(largest > 0.0);  // only the zero element pairs to zero with every e_k
    }
}

TEST_CASE("tail norm fraction") {
    HermiteCoeffs f;
    f.nu = 1.0;
    f.c = {Complex(1, 0), Complex(0, 0), Complex(1, 0)};
    const double tail = tail_norm_fraction(f, 1);
    const double expect =
        hermite_norm_sq(2, 1.0) / (hermite_norm_sq(0, 1.0) + hermite_norm_sq(2, 1.0));
    CHECK(tail == doctest::Approx(expect).epsilon(1e-14));
    CHECK(tail_norm_fraction(f, 10) == 0.0);
}
