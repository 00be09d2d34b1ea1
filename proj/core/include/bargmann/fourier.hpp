#pragma once

#include <functional>
#include <span>

#include "bargmann/coefficients.hpp"
#include "bargmann/quadrature.hpp"

namespace bargmann {

/// Branch selector for the two-signed Fourier family; minus picks the
/// kernel with e^{-i nu x u}, plus the conjugate one.
enum class SignChoice { minus, plus };

/// The eigenvalue unit of the branch: -i for minus, +i for plus.
Complex sign_unit(SignChoice sign);

/// Rescaled Fourier transform on the Gaussian-weighted line. Diagonal on
/// the Hermite basis, c_m |-> (sign_unit)^m c_m; four applications give
/// back the identity.
HermiteCoeffs fourier_rescaled(const HermiteCoeffs& f, SignChoice sign);

/// Direct kernel evaluation
///   (nu/2pi)^{1/2} int f(u) e^{(nu/2)(x -+ i u)^2} du
/// at one point. `rule_half` must carry the weight exponent nu/2.
Complex fourier_rescaled_quad(const std::function<Complex(double)>& f, SignChoice sign,
                              double nu, const QuadratureRule& rule_half, double x);

/// Dilation Gamma_theta f(xi) = f(theta xi) for a unit scalar theta:
/// a_m |-> theta^m a_m. Throws std::invalid_argument when |theta| != 1.
FockCoeffs1 gamma_dilation(Complex theta, const FockCoeffs1& f);
FockCoeffs2 gamma_dilation(Complex theta, const FockCoeffs2& f);

// -- Fourier-composed transforms -------------------------------------------------
// T1 maps the one-variable Fock space into A^{2,nu}(C^2); closed form
// (nu/pi)^{1/2} C_{-+ i psi1}. T2 maps the two-variable Fock space onto the
// one-variable one; closed form (pi/nu)^{1/2} C_{-+ i psi2}. Opposite-sign
// composition is the identity, same-sign composition is Gamma_{-1}.

ASubspaceCoeffs t1_transform(const FockCoeffs1& f, SignChoice sign);
FockCoeffs1 t2_transform(const FockCoeffs2& f, SignChoice sign);

/// Defining composition of T1 through the line modules:
/// g_transform o fourier_rescaled o b1_inverse.
ASubspaceCoeffs t1_via_definition(const FockCoeffs1& f, SignChoice sign);

/// Defining composition of T2: b1_forward o fourier_rescaled o r_transform.
FockCoeffs1 t2_via_definition(const FockCoeffs2& f, SignChoice sign);

/// Cross-check of T2 through the projection route:
/// gamma_dilation o proj o b2_inverse, with the projection taken by
/// planar quadrature of the synthesized tensor.
FockCoeffs1 t2_via_projection(const FockCoeffs2& f, SignChoice sign, const PlanarRule& rule);

// -- iterated transform on C^{2^k} -------------------------------------------------

/// The linear symbol form on C^{2^k}:
///   psi_k(Z) = 2^{-k/2} sum_{m=0}^{2^{k-1}-1} i^m (z_{2m+1} + i z_{2m+2}).
/// Throws std::invalid_argument when Z has the wrong length or k < 1.
Complex psi_k_eval(std::span<const Complex> Z, int k);

/// Iterated transform realized level-by-level through the pairwise
/// doubling rule; supported for k in {1, 2, 3}. The output stores the
/// coefficients along the one-parameter symbol ray.
HyperFockCoeffs gk_transform(const HermiteCoeffs& f, int k);

/// Least-squares scalar between the level-by-level output and the
/// composition-operator route C_{psi} o B1.
double gk_constant(int k, double nu);

/// Telescoped closed form (nu/pi)^{(2^k - 1)/2}.
double gk_constant_derived(int k, double nu);

/// The claimed constant (nu/pi)^{3 * 2^k / 4}; disagrees with the derived
/// value by (nu/pi)^{(2^k + 2)/4} whenever nu != pi.
double gk_constant_printed(int k, double nu);

/// Evaluation of a ray element at Z in C^{2^k} through psi_k_eval.
Complex eval_hyper_fock(const HyperFockCoeffs& f, std::span<const Complex> Z);

}  // namespace bargmann
