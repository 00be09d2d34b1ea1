#include "bargmann/quadrature.hpp"

#include <limits>
#include <numbers>
#include <stdexcept>

namespace bargmann {

namespace {

// Implicit-QL eigensolver for a symmetric tridiagonal matrix that tracks
// only the first row of the eigenvector matrix (IMTQLX form). On return d
// holds the eigenvalues in ascending order and z the first components of
// the corresponding normalized eigenvectors.
void tridiagonal_ql_first_row(std::vector<double>& d, std::vector<double>& e,
                              std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;

    constexpr int max_iter = 40;
    const double prec = std::numeric_limits<double>::epsilon();
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            while (m < n - 1) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= prec * dd) break;
                ++m;
            }
            if (m == l) break;
            if (++iter > max_iter)
                throw std::runtime_error("gauss_hermite_rule: tridiagonal QL did not converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    // rotation annihilated early; drop the shift and restart
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // insertion sort ascending, permuting z along
    for (int i = 1; i < n; ++i) {
        const double dv = d[i];
        const double zv = z[i];
        int j = i - 1;
        while (j >= 0 && d[j] > dv) {
            d[j + 1] = d[j];
            z[j + 1] = z[j];
            --j;
        }
        d[j + 1] = dv;
        z[j + 1] = zv;
    }
}

}  // namespace

QuadratureRule QuadratureRule::gauss_hermite(int n, double nu) {
    if (n < 1) throw std::invalid_argument("gauss_hermite_rule: node count must be >= 1");
    if (!(nu > 0.0)) throw std::invalid_argument("gauss_hermite_rule: nu must be positive");

    const double mu0 = std::sqrt(std::numbers::pi);

    std::vector<double> d(n, 0.0);
    std::vector<double> e(n, 0.0);
    std::vector<double> z(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = std::sqrt((i + 1) / 2.0);
    z[0] = 1.0;

    tridiagonal_ql_first_row(d, e, z);

    std::vector<double> nodes(n), weights(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = d[i];
        weights[i] = mu0 * z[i] * z[i];
    }

    // Enforce the exact +/- symmetry of the unit-rate rule.
    for (int i = 0; i < n / 2; ++i) {
        const int k = n - 1 - i;
        const double t = 0.5 * (nodes[k] - nodes[i]);
        nodes[i] = -t;
        nodes[k] = t;
        const double wm = 0.5 * (weights[i] + weights[k]);
        weights[i] = wm;
        weights[k] = wm;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;

    const double scale = 1.0 / std::sqrt(nu);
    for (int i = 0; i < n; ++i) {
        nodes[i] *= scale;
        weights[i] *= scale;
    }
    return QuadratureRule(std::move(nodes), std::move(weights), nu);
}

}  // namespace bargmann
