#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "bargmann/quaternion.hpp"

namespace bargmann {

/// Neumaier compensated accumulator for one double.
class CompensatedSum {
  public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

namespace detail {

template <typename T>
struct Accumulator;

template <>
struct Accumulator<double> {
    CompensatedSum s;
    void add(double v) { s.add(v); }
    double value() const { return s.value(); }
};

template <>
struct Accumulator<Complex> {
    CompensatedSum re, im;
    void add(const Complex& v) { re.add(v.real()); im.add(v.imag()); }
    Complex value() const { return {re.value(), im.value()}; }
};

template <>
struct Accumulator<Quaternion> {
    CompensatedSum w, x, y, z;
    void add(const Quaternion& v) { w.add(v.w); x.add(v.x); y.add(v.y); z.add(v.z); }
    Quaternion value() const { return {w.value(), x.value(), y.value(), z.value()}; }
};

}  // namespace detail

/// Gauss-Hermite rule for the weight e^{-nu x^2} on the real line:
/// integrate(f) ~ int f(x) e^{-nu x^2} dx, exact for polynomials of
/// degree <= 2n-1. Nodes strictly increasing, weights positive.
class QuadratureRule {
  public:
    /// Golub-Welsch construction: nodes are eigenvalues of the symmetric
    /// tridiagonal Jacobi matrix of the Hermite recurrence, obtained from
    /// the unit-rate rule by x -> x/sqrt(nu), w -> w/sqrt(nu).
    /// Throws std::invalid_argument for n < 1 or nu <= 0.
    static QuadratureRule gauss_hermite(int n, double nu);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    double weight_exponent() const { return nu_; }
    int size() const { return static_cast<int>(nodes_.size()); }

    /// Weighted sum over nodes with compensated accumulation.
    template <typename F>
    auto integrate(F&& f) const {
        using R = decltype(f(0.0));
        detail::Accumulator<R> acc;
        for (std::size_t i = 0; i < nodes_.size(); ++i) acc.add(f(nodes_[i]) * weights_[i]);
        return acc.value();
    }

  private:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights, double nu)
        : nodes_(std::move(nodes)), weights_(std::move(weights)), nu_(nu) {}

    std::vector<double> nodes_;
    std::vector<double> weights_;
    double nu_;
};

/// Product Gauss rule on C for the weight e^{-nu |zeta|^2} d(lambda):
/// integrate(f) ~ int_C f(zeta) e^{-nu|zeta|^2} dlambda(zeta), exact for
/// zeta^a conj(zeta)^b with a + b <= 2n-2.
///
/// Summation order: for each imaginary-part node v the full real-axis sum
/// runs first (compensated), then the outer sum over v; this makes the
/// planar rule bit-identical to iterated one-dimensional rules.
class PlanarRule {
  public:
    static PlanarRule gauss(int n_per_axis, double nu) {
        return PlanarRule(QuadratureRule::gauss_hermite(n_per_axis, nu));
    }

    const QuadratureRule& axis() const { return axis_; }
    double weight_exponent() const { return axis_.weight_exponent(); }
    int size_per_axis() const { return axis_.size(); }

    template <typename F>
    auto integrate(F&& f) const {
        const auto& xs = axis_.nodes();
        const auto& ws = axis_.weights();
        using R = decltype(f(Complex{}));
        detail::Accumulator<R> outer;
        for (std::size_t iv = 0; iv < xs.size(); ++iv) {
            detail::Accumulator<R> inner;
            for (std::size_t iu = 0; iu < xs.size(); ++iu)
                inner.add(f(Complex(xs[iu], xs[iv])) * ws[iu]);
            outer.add(inner.value() * ws[iv]);
        }
        return outer.value();
    }

  private:
    explicit PlanarRule(QuadratureRule axis) : axis_(std::move(axis)) {}
    QuadratureRule axis_;
};

}  // namespace bargmann
