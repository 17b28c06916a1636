#include "dynr/rmat.hpp"

#include <cmath>

namespace dynr {

namespace {
constexpr double kQtTol = 1e-11;
}

Tensor2 QuasiTriangular::cobracket_g(const Vec& xi_g) const {
  return leg_act(xi_g, r_skew_g, 0) + leg_act(xi_g, r_skew_g, 1);
}

namespace {

QuasiTriangular finish_qt(Subalgebra l, Tensor2 r_skew, Tensor2 omega) {
  QuasiTriangular qt;
  if (r_skew.skewness() > kQtTol)
    throw ConstructionError("QuasiTriangular: r_l is not skew");
  if ((omega.coords() - omega.coords().transpose()).cwiseAbs().maxCoeff() > kQtTol)
    throw ConstructionError("QuasiTriangular: Omega_l is not symmetric");
  if (invariance_defect(omega, Mat(Mat::Identity(l.dim(), l.dim()))) > 1e-11)
    throw ConstructionError("QuasiTriangular: Omega_l is not invariant");
  if (cyb(r_skew + omega * cplx(0.5)).max_norm() > kQtTol)
    throw ConstructionError("QuasiTriangular: CYB(r_l + Omega_l/2) != 0");

  qt.orthobasis = orthonormal_basis_via_casimir(*l.algebra, omega.coords());
  qt.omega_inv = omega.coords().inverse();
  qt.r_skew_g = embed_tensor(l, r_skew);
  qt.omega_g = embed_tensor(l, omega);
  qt.sub = std::move(l);
  qt.r_skew = std::move(r_skew);
  qt.omega = std::move(omega);
  return qt;
}

}  // namespace

QuasiTriangular standard_qt(const Subalgebra& l) {
  if (!l.roots)
    throw ConstructionError("standard_qt: subalgebra has no root datum");
  const RootDatum& rd = *l.roots;
  const int d = l.dim();

  Tensor2 omega = casimir(l.algebra);
  // Cartan block of the Casimir from the orthonormal basis of h
  const Mat& X = rd.cartan_orthonormal;
  Mat omega_h = X * X.transpose();

  Mat r_plus = 0.5 * omega_h;
  for (const Root& r : rd.roots)
    if (r.positive) r_plus(r.vector_index, r.negative_index) += 1.0;

  Tensor2 r_plus_t(l.algebra, r_plus);
  if (cyb(r_plus_t).max_norm() > kQtTol)
    throw ConstructionError("standard_qt: CYB(r_plus) != 0, root datum is broken");

  Tensor2 r_skew = r_plus_t - omega * cplx(0.5);
  return finish_qt(l, std::move(r_skew), std::move(omega));
}

QuasiTriangular make_qt(Subalgebra l, Mat r_skew_coords, Mat omega_coords) {
  Tensor2 r_skew(l.algebra, std::move(r_skew_coords));
  Tensor2 omega(l.algebra, std::move(omega_coords));
  return finish_qt(std::move(l), std::move(r_skew), std::move(omega));
}

Tensor3 z_element(const Tensor2& omega, cplx epsilon) {
  return bracket12_23(omega, omega) * (epsilon * epsilon / 4.0);
}

Tensor2 rho_cartan(const RootedAlgebra& g, cplx eps, const Vec& lambda) {
  ScalarFun f = ScalarFun::coth_scaled(eps);
  Mat coords = Mat::Zero(g.algebra->dim(), g.algebra->dim());
  for (const Root& r : g.roots.roots)
    coords(r.vector_index, r.negative_index) = f.eval(g.roots.pairing(r, lambda));
  return Tensor2(g.algebra, coords);
}

Tensor2 rho_cartan_derivative(const RootedAlgebra& g, cplx eps, const Vec& lambda,
                              const Vec& v) {
  Mat coords = Mat::Zero(g.algebra->dim(), g.algebra->dim());
  ScalarFun guard = ScalarFun::coth_scaled(eps);
  for (const Root& r : g.roots.roots) {
    cplx s = g.roots.pairing(r, lambda);
    guard.eval(s);  // pole check
    cplx sh = std::sinh((eps / 2.0) * s);
    coords(r.vector_index, r.negative_index) =
        -(eps * eps / 4.0) * g.roots.pairing(r, v) / (sh * sh);
  }
  return Tensor2(g.algebra, coords);
}

RPair rmat_levi(const QuasiTriangular& qt, cplx eps, const Vec& lambda_l) {
  const Subalgebra& l = qt.sub;
  Mat a = l.parent->adjoint(l.embed(lambda_l));
  std::vector<std::pair<Mat, ScalarFun>> blocks;
  blocks.emplace_back(l.inclusion, ScalarFun::trig_f0(eps));
  if (l.complement.cols() > 0)
    blocks.emplace_back(l.complement, ScalarFun::shifted_coth(eps, 0, 1));
  Mat F = apply_scalar_blocks(a, blocks);
  RPair out;
  out.r_prime = op_to_tensor(F, l.parent);
  out.r = out.r_prime - qt.r_skew_g;
  return out;
}

namespace {

Tensor2 graded_profile_tensor(const Subalgebra& g0, const Automorphism& b,
                              const ScalarFun& f0, cplx eps, const Vec& lambda_l) {
  Mat a = g0.parent->adjoint(g0.embed(lambda_l));
  std::vector<std::pair<Mat, ScalarFun>> blocks;
  if (static_cast<int>(b.eigenspaces.front().cols()) != g0.dim())
    throw ConstructionError("graded profile: g_0 dimension mismatch");
  blocks.emplace_back(g0.inclusion, f0);
  for (int j = 1; j < b.order; ++j)
    blocks.emplace_back(b.eigenspaces[j], ScalarFun::shifted_coth(eps, j, b.order));
  return op_to_tensor(apply_scalar_blocks(a, blocks), g0.parent);
}

}  // namespace

Tensor2 rmat_es(const Subalgebra& g0, const Automorphism& b, const Vec& lambda_l) {
  return graded_profile_tensor(g0, b, ScalarFun::rational_trig_f0(), 1.0, lambda_l);
}

RPair rmat_fm(const QuasiTriangular& qt, const Automorphism& b, cplx eps,
              const Vec& lambda_l) {
  RPair out;
  out.r_prime =
      graded_profile_tensor(qt.sub, b, ScalarFun::trig_f0(eps), eps, lambda_l);
  out.r = out.r_prime - qt.r_skew_g;
  return out;
}

}  // namespace dynr
