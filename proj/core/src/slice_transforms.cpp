#include "bargmann/slice_transforms.hpp"

#include <cmath>
#include <numbers>

#include "bargmann/hermite.hpp"
#include "bargmann/spaces.hpp"

namespace bargmann {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

inline double dot4(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

}  // namespace

Quaternion series_eval(const SliceRegularSeries& f, const Quaternion& q) {
    Quaternion acc{};
    for (std::size_t m = f.c.size(); m-- > 0;) acc = q * acc + f.c[m];
    return acc;
}

SliceInvariantFlag slice_invariant(const SliceRegularSeries& f, double tol) {
    SliceInvariantFlag flag;
    flag.is_slice_i_invariant = true;
    for (std::size_t m = 0; m < f.c.size(); ++m) {
        const double defect = f.c[m].slice_i_defect();
        if (defect > flag.defect) {
            flag.defect = defect;
            flag.worst_index = static_cast<int>(m);
        }
        if (defect > tol) flag.is_slice_i_invariant = false;
    }
    return flag;
}

Quaternion ext_from_slice(const std::function<Quaternion(Complex)>& f_on_slice,
                          const ImaginaryUnit& I, const Quaternion& q) {
    const SliceCoordinates sc = slice_coordinates(q);
    const Quaternion fp = f_on_slice(Complex(sc.a, sc.b));
    const Quaternion fm = f_on_slice(Complex(sc.a, -sc.b));
    const Quaternion ji = sc.axis.as_quaternion() * I.as_quaternion();
    return 0.5 * (fp + fm) + ji * (0.5 * (fm - fp));
}

Quaternion ext_from_slice_i(const std::function<Complex(Complex)>& f, const Quaternion& q) {
    return ext_from_slice([&](Complex s) { return Quaternion(f(s)); }, ImaginaryUnit::i(), q);
}

Quaternion kernel_KH(const Quaternion& q, const Quaternion& p, double nu, double tol) {
    const Quaternion pb = p.conj();
    const double switchover = nu * q.norm() * p.norm();
    Quaternion term{1.0, 0.0, 0.0, 0.0};
    detail::Accumulator<Quaternion> sum;
    sum.add(term);
    for (int m = 1; m <= 512; ++m) {
        term = (nu / m) * (q * term * pb);
        sum.add(term);
        const double snorm = sum.value().norm();
        if (term.norm() < tol * std::max(snorm, 1.0) && m > switchover)
            return (nu / std::numbers::pi) * sum.value();
    }
    throw std::runtime_error("kernel_KH: star exponential did not converge in 512 terms");
}

SliceRegularSeries bh_forward(const HermiteCoeffsQ& f) {
    SliceRegularSeries out;
    out.nu = f.nu;
    out.c.resize(f.c.size());
    for (std::size_t m = 0; m < f.c.size(); ++m)
        out.c[m] = b1_multiplier(static_cast<int>(m), f.nu) * f.c[m];
    return out;
}

SliceRegularSeries bh_forward(const HermiteCoeffs& f) {
    HermiteCoeffsQ q;
    q.nu = f.nu;
    q.c.assign(f.c.begin(), f.c.end());
    return bh_forward(q);
}

HermiteCoeffsQ bh_inverse(const SliceRegularSeries& f) {
    HermiteCoeffsQ out;
    out.nu = f.nu;
    out.c.resize(f.c.size());
    for (std::size_t m = 0; m < f.c.size(); ++m)
        out.c[m] = (1.0 / b1_multiplier(static_cast<int>(m), f.nu)) * f.c[m];
    return out;
}

Quaternion bh_forward_quad(const std::function<Quaternion(double)>& f, double nu,
                           const QuadratureRule& rule, const Quaternion& q) {
    const double c1 = std::pow(nu / std::numbers::pi, 0.75);
    const Quaternion quad = rule.integrate([&](double x) {
        const Quaternion expo = nu * (kSqrt2 * x * q - 0.5 * (q * q));
        return quat_exp(expo) * f(x);
    });
    return c1 * quad;
}

HermiteCoeffsQ bh_inverse_quad(const SliceRegularSeries& f, const ImaginaryUnit& I,
                               const PlanarRule& plane_rule, const QuadratureRule& line_rule,
                               int max_index) {
    const double nu = f.nu;
    const double c1 = std::pow(nu / std::numbers::pi, 0.75);

    // g(x) = c1 int_{C_I} e^{-nu qb^2/2 + sqrt2 nu x qb} F_I(q) e^{-nu|q|^2} dl(q)
    const auto& xs = line_rule.nodes();
    std::vector<Quaternion> g(xs.size());
    for (std::size_t t = 0; t < xs.size(); ++t) {
        const double x = xs[t];
        const Quaternion quad = plane_rule.integrate([&](Complex s) {
            const Complex sb = std::conj(s);
            const Complex kernel = std::exp(nu * (kSqrt2 * x * sb - 0.5 * sb * sb));
            const Quaternion fq = series_eval(f, I.embed(s));
            return I.embed(kernel) * fq;
        });
        g[t] = c1 * quad;
    }

    // project onto the Hermite basis
    HermiteCoeffsQ out;
    out.nu = nu;
    out.c.assign(max_index + 1, Quaternion{});
    const auto& ws = line_rule.weights();
    std::vector<double> h_prev(xs.size(), 0.0), h_cur(xs.size(), 1.0);
    for (int m = 0; m <= max_index; ++m) {
        detail::Accumulator<Quaternion> acc;
        for (std::size_t t = 0; t < xs.size(); ++t) acc.add(ws[t] * h_cur[t] * g[t]);
        out.c[m] = (1.0 / hermite_norm_sq(m, nu)) * acc.value();
        for (std::size_t t = 0; t < xs.size(); ++t) {
            const double hp = 2.0 * nu * xs[t] * h_cur[t] - 2.0 * nu * m * h_prev[t];
            h_prev[t] = h_cur[t];
            h_cur[t] = hp;
        }
    }
    return out;
}

SliceRegularSeries i_transform(const FockCoeffs2& f) {
    const FockCoeffs1 line = compose_psi2(f);
    SliceRegularSeries out;
    out.nu = f.nu;
    out.c.assign(line.a.begin(), line.a.end());
    return out;
}

Quaternion i_transform_quad(const FockCoeffs2& f, const PlanarRule& rule, const Quaternion& q) {
    const double nu = f.nu;
    return rule.integrate([&](Complex xi) {
        const auto [u, v] = SymbolMap::psi2().map_to_plane(xi);
        const Quaternion kh = kernel_KH(q, Quaternion(xi), nu);
        return kh * Quaternion(eval_fock2(f, u, v));
    });
}

ASubspaceCoeffs j_transform(const SliceRegularSeries& f, double tol) {
    ASubspaceCoeffs out;
    out.nu = f.nu;
    out.b.resize(f.c.size());
    const double c = std::sqrt(f.nu / std::numbers::pi);
    for (std::size_t m = 0; m < f.c.size(); ++m) {
        const double defect = f.c[m].slice_i_defect();
        if (defect > tol) throw SliceInvarianceError(static_cast<int>(m), defect);
        out.b[m] = c * std::exp2(-0.5 * static_cast<double>(m)) * f.c[m].to_complex_i();
    }
    return out;
}

SliceRegularSeries i_transform_via_r(const FockCoeffs2& f) { return bh_forward(r_transform(f)); }

double i_bridge_prefactor_fit(const FockCoeffs2& f) {
    const SliceRegularSeries via_r = i_transform_via_r(f);
    const SliceRegularSeries direct = i_transform(f);
    double num = 0.0, den = 0.0;
    const std::size_t n = std::min(via_r.c.size(), direct.c.size());
    for (std::size_t m = 0; m < n; ++m) {
        num += dot4(via_r.c[m], direct.c[m]);
        den += direct.c[m].norm_sq();
    }
    return den > 0.0 ? num / den : 0.0;
}

double ji_roundtrip_residual(const ASubspaceCoeffs& f) {
    const FockCoeffs2 embedded = a_subspace_embed(f);
    const HermiteCoeffs back = r_transform(embedded);
    const SliceRegularSeries slice = bh_forward(back);
    const ASubspaceCoeffs round = j_transform(slice, 1e-9);
    double res = 0.0;
    const std::size_t n = std::max(round.b.size(), f.b.size());
    for (std::size_t m = 0; m < n; ++m) {
        const Complex a = m < round.b.size() ? round.b[m] : Complex{};
        const Complex b = m < f.b.size() ? f.b[m] : Complex{};
        res = std::max(res, std::abs(a - b));
    }
    return res;
}

KernelFit ikernel_residual(Complex z, Complex w, std::span<const Quaternion> sample_qs,
                           double nu, int truncation) {
    // kernel section K_2(., (z,w)) as a coefficient matrix
    FockCoeffs2 section = FockCoeffs2::zero(nu, truncation + 1, truncation + 1);
    const double c = nu / std::numbers::pi;
    const Complex zb = std::conj(z);
    const Complex wb = std::conj(w);
    Complex zpow{1.0, 0.0};
    for (int m = 0; m <= truncation; ++m) {
        Complex wpow{1.0, 0.0};
        for (int n = 0; n <= truncation; ++n) {
            section.at(m, n) = c * c * std::pow(nu, m + n) * zpow * wpow /
                               (factorial(m) * factorial(n));
            wpow *= wb;
        }
        zpow *= zb;
    }

    const SliceRegularSeries lhs_series = i_transform(section);
    const Quaternion p{SymbolMap::psi1().map_to_line(z, w)};

    double num = 0.0, den = 0.0;
    std::vector<Quaternion> lhs(sample_qs.size()), rhs(sample_qs.size());
    for (std::size_t s = 0; s < sample_qs.size(); ++s) {
        lhs[s] = series_eval(lhs_series, sample_qs[s]);
        rhs[s] = kernel_KH(sample_qs[s], p, nu);
        num += dot4(lhs[s], rhs[s]);
        den += rhs[s].norm_sq();
    }
    KernelFit fit;
    fit.kappa = den > 0.0 ? num / den : 0.0;
    for (std::size_t s = 0; s < sample_qs.size(); ++s)
        fit.residual = std::max(fit.residual, (lhs[s] - fit.kappa * rhs[s]).norm());
    return fit;
}

KernelFit ckernel_residual(Complex xi, std::span<const std::pair<Complex, Complex>> grid,
                           double nu, int truncation) {
    // slice kernel section K_H(., xi), coefficients in C_i
    SliceRegularSeries section;
    section.nu = nu;
    section.c.resize(truncation + 1);
    const double c = nu / std::numbers::pi;
    const Complex xb = std::conj(xi);
    Complex pw{1.0, 0.0};
    for (int m = 0; m <= truncation; ++m) {
        section.c[m] = Quaternion(c * std::pow(nu, m) * pw / factorial(m));
        pw *= xb;
    }
    const ASubspaceCoeffs lhs_coeffs = j_transform(section);

    const auto [u, v] = SymbolMap::psi2().map_to_plane(xi);
    std::vector<Complex> lhs(grid.size()), rhs_holo(grid.size()), rhs_printed(grid.size());
    for (std::size_t s = 0; s < grid.size(); ++s) {
        const auto& [z, w] = grid[s];
        lhs[s] = eval_a2(lhs_coeffs, z, w);
        rhs_holo[s] = kernel_K2(z, w, u, v, nu);     // second slot holomorphic in (z,w)
        rhs_printed[s] = kernel_K2(u, v, z, w, nu);  // as printed, anti-holomorphic
    }

    const auto fit_against = [&](const std::vector<Complex>& rhs) {
        double num = 0.0, den = 0.0;
        for (std::size_t s = 0; s < rhs.size(); ++s) {
            num += (std::conj(rhs[s]) * lhs[s]).real();
            den += std::norm(rhs[s]);
        }
        const double kappa = den > 0.0 ? num / den : 0.0;
        double res = 0.0;
        for (std::size_t s = 0; s < rhs.size(); ++s)
            res = std::max(res, std::abs(lhs[s] - kappa * rhs[s]));
        return std::pair<double, double>{kappa, res};
    };

    const auto [k_holo, r_holo] = fit_against(rhs_holo);
    const auto [k_printed, r_printed] = fit_against(rhs_printed);

    KernelFit fit;
    if (r_holo <= r_printed) {
        fit.kappa = k_holo;
        fit.residual = r_holo;
        fit.second_slot_holomorphic = true;
    } else {
        fit.kappa = k_printed;
        fit.residual = r_printed;
        fit.second_slot_holomorphic = false;
    }
    return fit;
}

}  // namespace bargmann
