#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include "bargmann/quadrature.hpp"
#include "bargmann/quaternion.hpp"

using namespace bargmann;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double urand(std::mt19937_64& rng) { return ((rng() >> 11) * 0x1.0p-53) * 2.0 - 1.0; }

Quaternion qrand(std::mt19937_64& rng) {
    return {urand(rng), urand(rng), urand(rng), urand(rng)};
}

// 2x2 complex matrix representation of a quaternion: the Hamilton product
// must correspond to the matrix product.
using Mat2 = std::array<Complex, 4>;

Mat2 rep(const Quaternion& q) {
    return {Complex(q.w, q.x), Complex(q.y, q.z), Complex(-q.y, q.z), Complex(q.w, -q.x)};
}

Mat2 matmul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// closed-form moments of e^{-nu x^2}: int x^{2m} = (2m-1)!! / (2 nu)^m * sqrt(pi/nu)
double gaussian_moment(int degree, double nu) {
    if (degree % 2 == 1) return 0.0;
    double v = std::sqrt(std::numbers::pi / nu);
    for (int j = 1; j <= degree / 2; ++j) v *= (2.0 * j - 1.0) / (2.0 * nu);
    return v;
}

}  // namespace

TEST_CASE("quaternion multiplication table") {
    const Quaternion i = Quaternion::unit_i();
    const Quaternion j = Quaternion::unit_j();
    const Quaternion k = Quaternion::unit_k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    CHECK(i * i == Quaternion(-1, 0, 0, 0));
    CHECK(j * j == Quaternion(-1, 0, 0, 0));
    CHECK(k * k == Quaternion(-1, 0, 0, 0));
}

TEST_CASE("identity quaternion acts trivially") {
    std::mt19937_64 rng(7);
    const Quaternion one{1, 0, 0, 0};
    for (int t = 0; t < 100; ++t) {
        const Quaternion q = qrand(rng);
        CHECK(one * q == q);
        CHECK(q * one == q);
    }
}

TEST_CASE("quaternion product matches the 2x2 complex matrix representation") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const Quaternion p = qrand(rng);
        const Quaternion q = qrand(rng);
        const Mat2 lhs = rep(p * q);
        const Mat2 rhs = matmul(rep(p), rep(q));
        for (int e = 0; e < 4; ++e) CHECK(std::abs(lhs[e] - rhs[e]) <= 16 * kEps);
    }
}

TEST_CASE("quaternion norm is multiplicative") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10000; ++t) {
        const Quaternion p = qrand(rng);
        const Quaternion q = qrand(rng);
        const double lhs = (p * q).norm();
        const double rhs = p.norm() * q.norm();
        if (rhs > 0.0) CHECK(std::abs(lhs - rhs) <= 8 * kEps * rhs);
    }
}

TEST_CASE("quaternion algebra: associativity and conjugation anti-homomorphism") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 1000; ++t) {
        const Quaternion p = qrand(rng), q = qrand(rng), r = qrand(rng);
        const Quaternion assoc = (p * q) * r - p * (q * r);
        CHECK(assoc.norm() <= 8 * kEps * (p.norm() * q.norm() * r.norm() + 1.0));
        const Quaternion anti = (p * q).conj() - q.conj() * p.conj();
        CHECK(anti.norm() <= 8 * kEps * (p.norm() * q.norm() + 1.0));
    }
}

TEST_CASE("complex scalar field axioms hold to a few ulps") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 1000; ++t) {
        const Complex a{urand(rng), urand(rng)};
        const Complex b{urand(rng), urand(rng)};
        const Complex c{urand(rng), urand(rng)};
        const double scale = std::abs(a) * std::abs(b) * std::abs(c) + 1.0;
        CHECK(std::abs((a + b) + c - (a + (b + c))) <= 8 * kEps * scale);
        CHECK(std::abs(a * (b + c) - (a * b + a * c)) <= 8 * kEps * scale);
        CHECK(std::abs((a * b) * c - a * (b * c)) <= 8 * kEps * scale);
    }
}

TEST_CASE("imaginary units square to minus one") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        double x = urand(rng), y = urand(rng), z = urand(rng);
        if (x == 0 && y == 0 && z == 0) x = 1;
        const ImaginaryUnit I(x, y, z);
        const Quaternion sq = I.as_quaternion() * I.as_quaternion();
        CHECK((sq - Quaternion(-1, 0, 0, 0)).norm() <= 8 * kEps);
    }
    CHECK_THROWS_AS(ImaginaryUnit(0, 0, 0), std::invalid_argument);
}

TEST_CASE("gauss-hermite rule: frozen Gaussian integrals") {
    const QuadratureRule r = QuadratureRule::gauss_hermite(20, 1.0);
    CHECK(r.integrate([](double) { return 1.0; }) ==
          doctest::Approx(1.772453850905516).epsilon(1e-14));
    CHECK(std::abs(r.integrate([](double x) { return x; })) <= 1e-14);
    CHECK(r.integrate([](double x) { return x * x; }) ==
          doctest::Approx(0.8862269254527580).epsilon(1e-14));
}

TEST_CASE("gauss-hermite rule: exact on polynomials of degree <= 2n-1") {
    for (double nu : {0.5, 1.0, 2.0})
        for (int n : {1, 3, 8, 13}) {
            const QuadratureRule r = QuadratureRule::gauss_hermite(n, nu);
            for (int deg = 0; deg <= 2 * n - 1; ++deg) {
                const double got = r.integrate([&](double x) { return std::pow(x, deg); });
                const double want = gaussian_moment(deg, nu);
                CHECK(std::abs(got - want) <= 1e-12 * (std::abs(want) + 1.0));
            }
        }
}

TEST_CASE("gauss-hermite rule: node/weight structure and scaling") {
    const QuadratureRule unit = QuadratureRule::gauss_hermite(25, 1.0);
    const QuadratureRule scaled = QuadratureRule::gauss_hermite(25, 4.0);
    for (int i = 0; i < 25; ++i) {
        CHECK(scaled.weights()[i] > 0.0);
        if (i + 1 < 25) CHECK(scaled.nodes()[i] < scaled.nodes()[i + 1]);
        CHECK(scaled.nodes()[i] == unit.nodes()[i] / std::sqrt(4.0));
        CHECK(scaled.weights()[i] == unit.weights()[i] / std::sqrt(4.0));
    }
}

TEST_CASE("gauss-hermite rule: invalid arguments") {
    CHECK_THROWS_AS(QuadratureRule::gauss_hermite(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureRule::gauss_hermite(-3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureRule::gauss_hermite(8, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureRule::gauss_hermite(8, -1.0), std::invalid_argument);
}

TEST_CASE("doubling the node count never increases the monomial error") {
    for (double nu : {0.5, 1.0, 2.0})
        for (int n : {3, 4, 5, 6, 8, 12}) {
            const QuadratureRule coarse = QuadratureRule::gauss_hermite(n, nu);
            const QuadratureRule fine = QuadratureRule::gauss_hermite(2 * n, nu);
            for (int deg = 0; deg <= 24; deg += 2) {
                const double want = gaussian_moment(deg, nu);
                const double ec =
                    std::abs(coarse.integrate([&](double x) { return std::pow(x, deg); }) - want);
                const double ef =
                    std::abs(fine.integrate([&](double x) { return std::pow(x, deg); }) - want);
                CHECK(ef <= ec + 1e-13 * (std::abs(want) + 1.0));
            }
        }
}

TEST_CASE("planar rule: closed-form Gaussian moments") {
    for (double nu : {0.5, 1.0, 2.0}) {
        const PlanarRule r = PlanarRule::gauss(40, nu);
        CHECK(r.integrate([](Complex) { return 1.0; }) ==
              doctest::Approx(std::numbers::pi / nu).epsilon(1e-13));
        // rotational symmetry kills mixed moments
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                if (a == b) continue;
                const Complex got = r.integrate([&](Complex z) {
                    return std::pow(z, a) * std::pow(std::conj(z), b);
                });
                CHECK(std::abs(got) <= 1e-12);
            }
        for (int m = 0; m <= 6; ++m) {
            double want = std::numbers::pi / std::pow(nu, m + 1);
            for (int j = 2; j <= m; ++j) want *= j;
            const Complex got =
                r.integrate([&](Complex z) { return std::pow(std::abs(z), 2 * m); });
            CHECK(got.real() == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("planar rule rejects invalid arguments") {
    CHECK_THROWS_AS(PlanarRule::gauss(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PlanarRule::gauss(16, -0.5), std::invalid_argument);
}

TEST_CASE("planar rule equals iterated one-dimensional rules bit for bit") {
    const PlanarRule plane = PlanarRule::gauss(24, 1.5);
    const QuadratureRule& axis = plane.axis();
    const auto f = [](Complex z) { return std::exp(0.3 * z.real()) * (z.imag() + 2.0); };
    const double planar = plane.integrate(f);
    const double iterated = axis.integrate([&](double v) {
        return axis.integrate([&](double u) { return f(Complex(u, v)); });
    });
    CHECK(planar == iterated);
}
