#pragma once

#include <cstddef>
#include <vector>

#include "bargmann/quaternion.hpp"

namespace bargmann {

/// Element of L^{2,nu}(R) as a finite coefficient vector over the rescaled
/// Hermite basis H_m; c[m] multiplies H_m. Truncation is c.size() - 1.
struct HermiteCoeffs {
    double nu = 1.0;
    std::vector<Complex> c;

    int max_index() const { return static_cast<int>(c.size()) - 1; }
};

/// Same, with right quaternion coefficients (H-valued functions on R).
struct HermiteCoeffsQ {
    double nu = 1.0;
    std::vector<Quaternion> c;

    int max_index() const { return static_cast<int>(c.size()) - 1; }
};

/// Element of the Fock space on C over the monomials e_m(xi) = xi^m.
struct FockCoeffs1 {
    double nu = 1.0;
    std::vector<Complex> a;

    int max_index() const { return static_cast<int>(a.size()) - 1; }
};

/// Element of the Fock space on C^2 over e_{m,n}(z,w) = z^m w^n,
/// stored row-major with rows indexed by m and columns by n.
struct FockCoeffs2 {
    double nu = 1.0;
    std::size_t rows = 0;  // m = 0 .. rows-1
    std::size_t cols = 0;  // n = 0 .. cols-1
    std::vector<Complex> a;

    static FockCoeffs2 zero(double nu, std::size_t rows, std::size_t cols) {
        FockCoeffs2 f;
        f.nu = nu;
        f.rows = rows;
        f.cols = cols;
        f.a.assign(rows * cols, Complex{});
        return f;
    }

    Complex& at(std::size_t m, std::size_t n) { return a[m * cols + n]; }
    const Complex& at(std::size_t m, std::size_t n) const { return a[m * cols + n]; }
};

/// Element of the subspace A^{2,nu}(C^2) = ker(d/dz + i d/dw) over the
/// basis (z + i w)^m.
struct ASubspaceCoeffs {
    double nu = 1.0;
    std::vector<Complex> b;

    int max_index() const { return static_cast<int>(b.size()) - 1; }
};

/// Tensor element of L^{2,nu}(R^2) over H_m(x) H_n(y), row-major (m, n).
struct HermiteTensor {
    double nu = 1.0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> g;

    static HermiteTensor zero(double nu, std::size_t rows, std::size_t cols) {
        HermiteTensor t;
        t.nu = nu;
        t.rows = rows;
        t.cols = cols;
        t.g.assign(rows * cols, Complex{});
        return t;
    }

    Complex& at(std::size_t m, std::size_t n) { return g[m * cols + n]; }
    const Complex& at(std::size_t m, std::size_t n) const { return g[m * cols + n]; }
};

/// Quaternionic power series sum_m q^m c_m with right coefficients,
/// representing a slice regular function on H.
struct SliceRegularSeries {
    double nu = 1.0;
    std::vector<Quaternion> c;

    int max_index() const { return static_cast<int>(c.size()) - 1; }
};

/// Derived property of a slice series: whether all coefficients lie in the
/// slice C_i within tolerance. `defect` is the largest |j| + |k| component.
struct SliceInvariantFlag {
    bool is_slice_i_invariant = false;
    double defect = 0.0;
    int worst_index = -1;
};

/// Image element of the iterated transform into the Fock space on C^{2^k}:
/// coefficients b_m over powers of the pulled-back linear symbol form.
struct HyperFockCoeffs {
    double nu = 1.0;
    int level = 1;  // k; the ambient space is C^{2^k}
    std::vector<Complex> b;

    int max_index() const { return static_cast<int>(b.size()) - 1; }
};

// -- evaluation / synthesis -------------------------------------------------

/// sum_m c_m H_m(x), Horner-free accumulation along the recurrence.
Complex hermite_synthesis(const HermiteCoeffs& f, double x);
Quaternion hermite_synthesis(const HermiteCoeffsQ& f, double x);

/// Polynomial evaluation sum a_m xi^m.
Complex eval_fock1(const FockCoeffs1& f, Complex xi);

/// sum_{m,n} a_{m,n} z^m w^n.
Complex eval_fock2(const FockCoeffs2& f, Complex z, Complex w);

/// sum_m b_m (z + i w)^m.
Complex eval_a2(const ASubspaceCoeffs& f, Complex z, Complex w);

/// sum_{m,n} g_{m,n} H_m(x) H_n(y).
Complex eval_hermite_tensor(const HermiteTensor& t, double x, double y);

}  // namespace bargmann
