#pragma once

#include <cmath>

namespace bargmann {

/// n! as a double (exact for n <= 170).
double factorial(int n);

/// log(n!)
double log_factorial(int n);

/// Binomial coefficient as a double.
double binomial(int n, int k);

/// Rescaled real Hermite polynomial H_m(x) for the weight e^{-nu x^2},
/// defined by the Rodrigues formula
///     H_m(x) = (-1)^m e^{nu x^2} (d/dx)^m e^{-nu x^2}
/// and evaluated by the three-term recurrence
///     H_{m+1} = 2 nu x H_m - 2 nu m H_{m-1},   H_0 = 1.
double hermite_eval(int m, double nu, double x);

/// Squared norm of H_m against e^{-nu x^2} dx:
///     ||H_m||^2 = 2^m m! nu^{m - 1/2} sqrt(pi).
/// Computed in log space above index 20.
double hermite_norm_sq(int m, double nu);

/// Squared norm of the monomial xi^m in the Fock space on C with measure
/// e^{-nu |xi|^2} dlambda:  ||e_m||^2 = pi m! / nu^{m+1}.
double fock1_norm_sq(int m, double nu);

/// Squared norm of (z + i w)^k in the Fock space on C^2:
///     ||(z+iw)^k||^2 = 2^k k! pi^2 / nu^{k+2}.
double a2_basis_norm_sq(int k, double nu);

}  // namespace bargmann
