#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bargmann/coefficients.hpp"
#include "bargmann/quadrature.hpp"
#include "bargmann/transforms.hpp"

namespace bargmann {

/// Thrown by j_transform when a coefficient leaves the slice C_i; carries
/// the first offending index.
class SliceInvarianceError : public std::invalid_argument {
  public:
    SliceInvarianceError(int index, double defect)
        : std::invalid_argument("j_transform: coefficient " + std::to_string(index) +
                                " not in C_i (defect " + std::to_string(defect) + ")"),
          index_(index),
          defect_(defect) {}
    int index() const { return index_; }
    double defect() const { return defect_; }

  private:
    int index_;
    double defect_;
};

/// sum_m q^m c_m with right coefficients (Horner form c_0 + q(c_1 + q(...))).
Quaternion series_eval(const SliceRegularSeries& f, const Quaternion& q);

SliceInvariantFlag slice_invariant(const SliceRegularSeries& f, double tol = 1e-12);

/// Slice regular extension of a holomorphic H-valued function given on the
/// slice C_I, evaluated at q = x + yJ:
///   Ext(f)(x + yJ) = (1/2)[f(x+yI) + f(x-yI)] + (JI/2)[f(x-yI) - f(x+yI)].
/// The function receives the slice coordinate as a complex number.
Quaternion ext_from_slice(const std::function<Quaternion(Complex)>& f_on_slice,
                          const ImaginaryUnit& I, const Quaternion& q);

/// Convenience for C-valued functions on the default slice C_i.
Quaternion ext_from_slice_i(const std::function<Complex(Complex)>& f, const Quaternion& q);

/// Reproducing kernel of the slice hyperholomorphic Fock space, the
/// truncated star exponential
///   K_H(q, p) = (nu/pi) sum_m nu^m q^m conj(p)^m / m!,
/// summed until the term/sum ratio drops below tol and the index exceeds
/// nu |q| |p|. Throws std::runtime_error after 512 terms.
Quaternion kernel_KH(const Quaternion& q, const Quaternion& p, double nu, double tol = 1e-15);

// -- quaternionic Segal-Bargmann transform --------------------------------------
// Diagonal action c_m |-> (nu/pi)^{1/4} 2^{m/2} nu^m c_m attached to q^m;
// the slice regular extension of the line transform. Right H-linear.

SliceRegularSeries bh_forward(const HermiteCoeffsQ& f);
SliceRegularSeries bh_forward(const HermiteCoeffs& f);
HermiteCoeffsQ bh_inverse(const SliceRegularSeries& f);

/// Quadrature path of the forward transform at one quaternion. The kernel
/// factor multiplies from the left so that right coefficients are preserved.
Quaternion bh_forward_quad(const std::function<Quaternion(double)>& f, double nu,
                           const QuadratureRule& rule, const Quaternion& q);

/// Quadrature path of the inverse: integrates over the slice C_I and then
/// projects onto the Hermite basis. Kernel factor on the left.
HermiteCoeffsQ bh_inverse_quad(const SliceRegularSeries& f, const ImaginaryUnit& I,
                               const PlanarRule& plane_rule, const QuadratureRule& line_rule,
                               int max_index);

// -- bridge transforms -----------------------------------------------------------

/// I: two-variable Fock -> slice series, the extension of the composition
/// with psi2. Coefficient action b_j = sum_k (-i)^k 2^{-j/2} a_{j-k,k}.
SliceRegularSeries i_transform(const FockCoeffs2& f);

/// Integral path of I at one quaternion: the pairing of F o psi2 against
/// K_H under the planar Gaussian measure.
Quaternion i_transform_quad(const FockCoeffs2& f, const PlanarRule& rule, const Quaternion& q);

/// J: slice-i-invariant series -> A^{2,nu}(C^2), the composed transform of
/// the inverted quaternionic transform:
///   J F(z,w) = (nu/pi)^{1/2} F((z+iw)/sqrt 2),
/// coefficient action c_m |-> (nu/pi)^{1/2} 2^{-m/2} c_m.
/// Throws SliceInvarianceError when a coefficient leaves C_i.
ASubspaceCoeffs j_transform(const SliceRegularSeries& f, double tol = 1e-12);

/// The operator route through the left inverse: bh_forward o r_transform.
/// Differs from i_transform by the scalar (pi/nu)^{1/2} (fitted and
/// reported, see i_bridge_prefactor_fit).
SliceRegularSeries i_transform_via_r(const FockCoeffs2& f);

/// Least-squares scalar between i_transform_via_r and i_transform
/// coefficients; resolves to (pi/nu)^{1/2}.
double i_bridge_prefactor_fit(const FockCoeffs2& f);

/// Round trip through the inverse pair of the bridge: the residual of
/// j_transform(bh_forward(r_transform(embed(F)))) against F. Identity on
/// the subspace, any nu.
double ji_roundtrip_residual(const ASubspaceCoeffs& f);

// -- kernel-mapping identities ----------------------------------------------------

struct KernelFit {
    double kappa = 0.0;      ///< least-squares scalar between the two sides
    double residual = 0.0;   ///< max |LHS - kappa RHS| after the fit
    bool second_slot_holomorphic = false;  ///< chosen convention (ckernel only)
};

/// I applied to the two-variable kernel section at (z, w) against
/// K_H(., (z+iw)/sqrt 2), fitted over the sample quaternions.
/// The resolved constant is kappa = nu/pi (equal to 1 at nu = pi).
KernelFit ikernel_residual(Complex z, Complex w, std::span<const Quaternion> sample_qs,
                           double nu, int truncation);

/// J applied to the slice kernel section at xi against the two-variable
/// kernel at psi2(xi), trying both conjugation conventions for the second
/// slot of K_2 and keeping the better fit.
/// The resolved constant is kappa = (pi/nu)^{1/2} (equal to 1 at nu = pi).
KernelFit ckernel_residual(Complex xi, std::span<const std::pair<Complex, Complex>> grid,
                           double nu, int truncation);

}  // namespace bargmann
