#include "bargmann/hermite.hpp"

#include <numbers>
#include <stdexcept>

namespace bargmann {

double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative index");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: negative index");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 60) {
        // exact in double, all intermediates are integers < 2^53
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

double hermite_eval(int m, double nu, double x) {
    if (m < 0) throw std::invalid_argument("hermite_eval: negative index");
    if (!(nu > 0.0)) throw std::invalid_argument("hermite_eval: nu must be positive");
    if (m == 0) return 1.0;
    double hm1 = 1.0;
    double h = 2.0 * nu * x;
    for (int k = 1; k < m; ++k) {
        const double hp = 2.0 * nu * x * h - 2.0 * nu * k * hm1;
        hm1 = h;
        h = hp;
    }
    return h;
}

double hermite_norm_sq(int m, double nu) {
    if (m < 0) throw std::invalid_argument("hermite_norm_sq: negative index");
    if (!(nu > 0.0)) throw std::invalid_argument("hermite_norm_sq: nu must be positive");
    if (m <= 20)
        return std::exp2(m) * factorial(m) * std::pow(nu, m - 0.5) * std::sqrt(std::numbers::pi);
    return std::exp(m * std::numbers::ln2 + log_factorial(m) + (m - 0.5) * std::log(nu) +
                    0.5 * std::log(std::numbers::pi));
}

double fock1_norm_sq(int m, double nu) {
    if (m < 0) throw std::invalid_argument("fock1_norm_sq: negative index");
    if (!(nu > 0.0)) throw std::invalid_argument("fock1_norm_sq: nu must be positive");
    if (m <= 20) return std::numbers::pi * factorial(m) / std::pow(nu, m + 1);
    return std::exp(std::log(std::numbers::pi) + log_factorial(m) - (m + 1) * std::log(nu));
}

double a2_basis_norm_sq(int k, double nu) {
    if (k < 0) throw std::invalid_argument("a2_basis_norm_sq: negative index");
    if (!(nu > 0.0)) throw std::invalid_argument("a2_basis_norm_sq: nu must be positive");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    if (k <= 20) return std::exp2(k) * factorial(k) * pi2 / std::pow(nu, k + 2);
    return std::exp(k * std::numbers::ln2 + log_factorial(k) + std::log(pi2) -
                    (k + 2) * std::log(nu));
}

}  // namespace bargmann
