#ifndef DYNR_VERIFY_HPP
#define DYNR_VERIFY_HPP

#include <map>
#include <string>

#include "dynr/dynfield.hpp"

namespace dynr {

/// One residual evaluation at one sample point.
/// residual_rel = residual_abs / (1 + ||r||^2 * dim); verdict compares the
/// relative residual against the tolerance.
struct ResidualReport {
  std::string scenario;
  Vec lambda;
  double residual_abs = 0.0;
  double residual_rel = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, double> metadata;

  static ResidualReport make(std::string scenario, Vec lambda, double abs,
                             double rel_denominator, double tolerance);
};

/// Twisted equivariance: xi|>r + [xi(x)1 + 1(x)xi, r] + delta(xi) = 0 for all
/// xi in the l basis.
ResidualReport quasi_invariance_residual(const TensorFn& r_fn,
                                         const QuasiTriangular& qt,
                                         const BasePoint& p, double tol);

/// Plain equivariance of r' (delta = 0).
ResidualReport invariance_residual(const TensorFn& rp_fn, const Subalgebra& l,
                                   const BasePoint& p, double tol);

/// Coordinate data of an abelian base subspace V inside g: columns of
/// inclusion embed base coordinates into g; orthobasis columns are orthonormal
/// w.r.t. the form restricted to V.
struct AbelianBase {
  AlgebraPtr parent;
  Mat inclusion;
  Mat orthobasis;
};

AbelianBase cartan_base(const Subalgebra& l);  // h_l inside the parent of l
AbelianBase full_base(const Subalgebra& l);    // all of l inside its parent

using AnalyticDirectional = std::function<Tensor2(const Vec& lambda, const Vec& v)>;

/// sum_i Alt(x_i (x) d_i r) + CYB(r) - Z over an abelian base; derivatives via
/// finite differences or the supplied analytic path.
ResidualReport cdybe_residual_abelian(const TensorFn& r_fn, const AbelianBase& base,
                                      const Vec& lambda, const Tensor3& z,
                                      double tol,
                                      const AnalyticDirectional* analytic = nullptr);

/// sum_i Alt(xi_i (x) nabla'_{xi_i} r') + CYB(r') - (Z - zl_sign * Z_l).
ResidualReport cdybe_residual_reduced(const TensorFn& rp_fn,
                                      const QuasiTriangular& qt, const BasePoint& p,
                                      const Tensor3& z, const Tensor3& z_l,
                                      double tol, int zl_sign = +1);

/// sum_i Alt(xi_i (x) grad_{eta^i} r) + CYB(r) - Z with the eta fields of the
/// group chart.
ResidualReport cdybe_residual_pl(const TensorFn& r_fn, const QuasiTriangular& qt,
                                 const BasePoint& p, const Tensor3& z, double tol,
                                 int eta_sign = +1);

struct EquivalenceResult {
  bool verdicts_agree = false;
  ResidualReport pl;
  ResidualReport reduced;
};

/// The two formulations evaluated on r and on r' = r + r_l must agree in
/// verdict.
EquivalenceResult proposition_equivalence(const TensorFn& r_fn,
                                          const QuasiTriangular& qt,
                                          const BasePoint& p, const Tensor3& z,
                                          double tol);

struct ReductionResult {
  ResidualReport abelian;       // CDYBE of the rebuilt r-tilde over h_l
  double restriction_identity;  // || r|_{h_l} + r_l + rho(l,1,.) - rho(g,eps,.) ||
};

/// Base reduction: r-tilde(mu) = r(mu) + rho(l,1,mu) + r_l over h_l must solve
/// the abelian CDYBE with Z^eps_g. lambda_h is in l coordinates, supported on
/// the Cartan of l. rho_eps controls the epsilon used when rebuilding r-tilde
/// (the wrong-epsilon negative control passes a different value).
ReductionResult reduction_crosscheck(const TensorFn& r_fn, const RootedAlgebra& g,
                                     const QuasiTriangular& qt, cplx eps,
                                     const Vec& lambda_h, double tol,
                                     cplx rmat_eps_override = 0.0);

/// || rho(g,eps,lambda) - eps rho(g,1,eps lambda) ||.
double dilation_residual(const RootedAlgebra& g, cplx eps, const Vec& lambda);

struct ChartConsistency {
  double difference_identity = 0.0;  // xi^l - xi^r = ad(lambda) xi
  double mean_identity = 0.0;        // (xi^l + xi^r)/2 = nabla' coefficient
};

ChartConsistency chart_consistency_residuals(const LieAlgebra& l, const BasePoint& p);

}  // namespace dynr

#endif
