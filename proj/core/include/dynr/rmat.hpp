#ifndef DYNR_RMAT_HPP
#define DYNR_RMAT_HPP

#include "dynr/matfun.hpp"
#include "dynr/tensor.hpp"

namespace dynr {

/// Factorizable quasitriangular structure (r_l, Omega_l) on a subalgebra l of
/// g. Tensors are stored in l coordinates; embedded copies in g coordinates
/// are precomputed.
struct QuasiTriangular {
  Subalgebra sub;
  Tensor2 r_skew;   // over sub.algebra
  Tensor2 omega;    // over sub.algebra
  Tensor2 r_skew_g; // embedded in parent coordinates
  Tensor2 omega_g;
  Mat orthobasis;   // columns xi_i, Omega^{-1}-orthonormal, l coords
  Mat omega_inv;    // inverse of the omega coordinate matrix

  /// Covector coordinates of eta^i with <eta^i, xi_j> = delta_ij.
  Vec eta_covector(int i) const { return omega_inv * orthobasis.col(i); }
  /// First-leg pairing: T(eta) for T in l (x) l.
  static Vec pair_first(const Tensor2& t, const Vec& eta) {
    return t.coords().transpose() * eta;
  }
  /// Cobracket delta(xi) = [xi (x) 1 + 1 (x) xi, r_l] in parent coordinates.
  Tensor2 cobracket_g(const Vec& xi_g) const;
};

/// Standard quasitriangular structure on a reductive l with root datum:
/// r_plus = (1/2) Omega_h + sum_{alpha>0} e_alpha (x) e_{-alpha},
/// r_skew = r_plus - (1/2) Omega_l.
QuasiTriangular standard_qt(const Subalgebra& l);

/// Quasitriangular structure from a user-supplied pair (r_l, Omega_l) given
/// in l coordinates; validates the structure invariants.
QuasiTriangular make_qt(Subalgebra l, Mat r_skew_coords, Mat omega_coords);

/// Z = (eps^2/4) [Omega_12, Omega_23].
Tensor3 z_element(const Tensor2& omega, cplx epsilon);

/// Trigonometric r-matrix over the Cartan:
/// sum_alpha (eps/2) coth((eps/2)(alpha,lambda)) e_alpha (x) e_{-alpha}.
/// lambda is given in full algebra coordinates supported on the Cartan.
Tensor2 rho_cartan(const RootedAlgebra& g, cplx eps, const Vec& lambda);

/// Analytic directional derivative of rho_cartan along v (also in algebra
/// coordinates supported on the Cartan).
Tensor2 rho_cartan_derivative(const RootedAlgebra& g, cplx eps, const Vec& lambda,
                              const Vec& v);

struct RPair {
  Tensor2 r_prime;  // invariant part, g coordinates
  Tensor2 r;        // r_prime - r_l, quasi-invariant
};

/// Levi-type r-matrix: block operator (trig_f0 on l, -coth_scaled on l_perp)
/// converted to a tensor, minus r_l. lambda in l coordinates.
RPair rmat_levi(const QuasiTriangular& qt, cplx eps, const Vec& lambda_l);

/// Rational-trigonometric r-matrix for a grading automorphism B:
/// rational_trig_f0 on g_0 and shifted coth profiles on g_j. lambda in g_0
/// coordinates of the fixed subalgebra.
Tensor2 rmat_es(const Subalgebra& g0, const Automorphism& b, const Vec& lambda_l);

/// Trigonometric analog: trig_f0(eps) on g_0, shifted_coth(eps,j,n) on g_j;
/// r = r_prime - r_l with the quasitriangular structure on l = g_0.
RPair rmat_fm(const QuasiTriangular& qt, const Automorphism& b, cplx eps,
              const Vec& lambda_l);

}  // namespace dynr

#endif
