#include "bargmann/coefficients.hpp"

#include "bargmann/hermite.hpp"

namespace bargmann {

namespace {

// One pass of the Hermite recurrence, accumulating sum c_m H_m(x).
template <typename Scalar>
Scalar synthesize(double nu, const std::vector<Scalar>& c, double x) {
    Scalar acc{};
    double hm1 = 0.0;
    double h = 1.0;
    for (std::size_t m = 0; m < c.size(); ++m) {
        acc += c[m] * h;
        const double hp = 2.0 * nu * x * h - 2.0 * nu * static_cast<double>(m) * hm1;
        hm1 = h;
        h = hp;
    }
    return acc;
}

}  // namespace

Complex hermite_synthesis(const HermiteCoeffs& f, double x) { return synthesize(f.nu, f.c, x); }

Quaternion hermite_synthesis(const HermiteCoeffsQ& f, double x) { return synthesize(f.nu, f.c, x); }

Complex eval_fock1(const FockCoeffs1& f, Complex xi) {
    Complex acc{};
    for (std::size_t m = f.a.size(); m-- > 0;) acc = acc * xi + f.a[m];
    return acc;
}

Complex eval_fock2(const FockCoeffs2& f, Complex z, Complex w) {
    Complex acc{};
    for (std::size_t m = f.rows; m-- > 0;) {
        Complex row{};
        for (std::size_t n = f.cols; n-- > 0;) row = row * w + f.at(m, n);
        acc = acc * z + row;
    }
    return acc;
}

Complex eval_a2(const ASubspaceCoeffs& f, Complex z, Complex w) {
    const Complex u = z + Complex(0, 1) * w;
    Complex acc{};
    for (std::size_t m = f.b.size(); m-- > 0;) acc = acc * u + f.b[m];
    return acc;
}

Complex eval_hermite_tensor(const HermiteTensor& t, double x, double y) {
    Complex acc{};
    double hxm1 = 0.0, hx = 1.0;
    for (std::size_t m = 0; m < t.rows; ++m) {
        Complex row{};
        double hym1 = 0.0, hy = 1.0;
        for (std::size_t n = 0; n < t.cols; ++n) {
            row += t.at(m, n) * hy;
            const double hyp = 2.0 * t.nu * y * hy - 2.0 * t.nu * static_cast<double>(n) * hym1;
            hym1 = hy;
            hy = hyp;
        }
        acc += row * hx;
        const double hxp = 2.0 * t.nu * x * hx - 2.0 * t.nu * static_cast<double>(m) * hxm1;
        hxm1 = hx;
        hx = hxp;
    }
    return acc;
}

}  // namespace bargmann
