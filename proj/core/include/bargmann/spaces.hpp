#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "bargmann/coefficients.hpp"
#include "bargmann/hermite.hpp"
#include "bargmann/quadrature.hpp"

namespace bargmann {

/// Thrown by a_subspace_extract when the input is not annihilated by
/// D_{z,w} = d/dz + i d/dw; carries the residual norm.
class NotInSubspaceError : public std::runtime_error {
  public:
    explicit NotInSubspaceError(double residual)
        : std::runtime_error("a_subspace_extract: input not in ker(d/dz + i d/dw), residual " +
                             std::to_string(residual)),
          residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

// -- norms and inner products -------------------------------------------------
// All inner products are antilinear in the SECOND argument:
// <F, G> = integral of conj(G) * F against the Gaussian measure.

/// sum_m |c_m|^2 ||H_m||^2
double norm_sq(const HermiteCoeffs& f);
double norm_sq(const HermiteCoeffsQ& f);

/// sum_m |a_m|^2 ||e_m||^2
double norm_sq(const FockCoeffs1& f);

/// sum_{m,n} |a_{m,n}|^2 ||e_m||^2 ||e_n||^2
double norm_sq(const FockCoeffs2& f);

/// sum_m |b_m|^2 2^m m! pi^2 / nu^{m+2}
double norm_sq(const ASubspaceCoeffs& f);

/// sum_{m,n} |g_{m,n}|^2 ||H_m||^2 ||H_n||^2
double norm_sq(const HermiteTensor& t);

/// Membership norm of a slice series: (pi/nu) sum_m (m!/nu^m) |c_m|^2.
double norm_sq(const SliceRegularSeries& f);

/// <F, G> on the Fock space on C; throws on mismatched nu.
Complex fock1_inner(const FockCoeffs1& f, const FockCoeffs1& g);

/// <F, G> on the Fock space on C^2; throws on mismatched nu.
Complex fock2_inner(const FockCoeffs2& f, const FockCoeffs2& g);

/// <f, g> on L^{2,nu}(R); throws on mismatched nu.
Complex hermite_inner(const HermiteCoeffs& f, const HermiteCoeffs& g);

/// Fraction of the squared norm carried by indices > keep_max.
double tail_norm_fraction(const HermiteCoeffs& f, int keep_max);
double tail_norm_fraction(const FockCoeffs1& f, int keep_max);

// -- reproducing kernels ------------------------------------------------------

/// K_1(xi, zeta) = (nu/pi) exp(nu xi conj(zeta)), holomorphic in the first
/// slot and anti-holomorphic in the second.
Complex kernel_K1(Complex xi, Complex zeta, double nu);

/// K_2((u,v), (z,w)) = (nu/pi)^2 exp(nu (u conj(z) + v conj(w))).
Complex kernel_K2(Complex u, Complex v, Complex z, Complex w, double nu);

// -- orthogonal projection ----------------------------------------------------

/// Orthogonal projection of a square-integrable function on C onto the
/// holomorphic Fock space:
///   Proj f(xi) = (nu/pi) int f(zeta) e^{nu xi conj(zeta)} e^{-nu|zeta|^2} dl,
/// realized through the quadrature moments a_m = <f, e_m> / ||e_m||^2.
FockCoeffs1 proj_fock1(const std::function<Complex(Complex)>& f, double nu,
                       const PlanarRule& rule, int max_index);

/// Projection restricted to coefficient inputs; fixes them exactly.
FockCoeffs1 proj_fock1(const FockCoeffs1& f);

// -- the subspace A^{2,nu}(C^2) -----------------------------------------------

/// Coefficient action of D_{z,w} = d/dz + i d/dw:
///   (DF)_{m,n} = (m+1) a_{m+1,n} + i (n+1) a_{m,n+1},
/// with output truncation (rows-1, cols-1).
FockCoeffs2 dzw_apply(const FockCoeffs2& f);

/// Largest coefficient magnitude of dzw_apply(f).
double dzw_residual(const FockCoeffs2& f);

/// Binomial expansion of sum_m b_m (z + i w)^m into the monomial basis:
/// a_{m-j, j} = b_m binom(m, j) i^j.
FockCoeffs2 a_subspace_embed(const ASubspaceCoeffs& b);

/// Inverse of the embedding on ker D_{z,w}: recovers b_k = a_{k,0} after
/// checking a_{m,n} = i^n ((m+n)!/(m! n!)) a_{m+n,0} holds through the
/// annihilation residual. Throws NotInSubspaceError when dzw_residual
/// exceeds the tolerance.
ASubspaceCoeffs a_subspace_extract(const FockCoeffs2& f, double tol = 1e-10);

}  // namespace bargmann
