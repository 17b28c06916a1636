#ifndef DYNR_LIEALG_HPP
#define DYNR_LIEALG_HPP

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dynr {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Raised when a construction violates one of its structural invariants.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructuralResiduals {
  double antisymmetry = 0.0;
  double jacobi = 0.0;
  double form_invariance = 0.0;
  double gram_condition = 0.0;
  double max() const;
};

/// Finite-dimensional complex Lie algebra given by structure constants
/// c[i][j][k] ([u_i,u_j] = sum_k c[i][j][k] u_k) and the Gram matrix of an
/// invariant symmetric bilinear form. Immutable after construction.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels,
             std::vector<Mat> adjoint_basis,  // adjoint_basis[i](k,j) = c[i][j][k]
             Mat gram);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Mat& gram() const { return gram_; }
  const Mat& gram_inverse() const { return gram_inv_; }
  double gram_condition() const { return residuals_.gram_condition; }

  cplx structure_constant(int i, int j, int k) const { return ad_[i](k, j); }
  const Mat& adjoint_basis(int i) const { return ad_[i]; }

  /// Matrix of ad(x) in the defining basis.
  Mat adjoint(const Vec& x) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  const StructuralResiduals& residuals() const { return residuals_; }

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Mat> ad_;
  Mat gram_, gram_inv_;
  StructuralResiduals residuals_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// One root: its values on the Cartan basis elements, the basis index of its
/// root vector e_alpha, and the index of e_{-alpha}.
struct Root {
  Vec on_cartan;
  int vector_index = -1;
  int negative_index = -1;
  bool positive = false;
};

struct RootDatum {
  std::vector<int> cartan_indices;
  Mat cartan_orthonormal;  // dim x rank; columns orthonormal w.r.t. gram on h
  std::vector<Root> roots;

  int rank() const { return static_cast<int>(cartan_indices.size()); }
  /// alpha(lambda) for lambda in algebra coordinates supported on the Cartan.
  cplx pairing(const Root& alpha, const Vec& lambda) const;
};

struct RootedAlgebra {
  AlgebraPtr algebra;
  RootDatum roots;
};

/// A subalgebra l of a parent algebra, with the induced algebra structure on
/// the subspace basis and the orthogonal complement w.r.t. the parent form.
struct Subalgebra {
  AlgebraPtr parent;
  Mat inclusion;   // dim_g x dim_l, columns = l basis in g coordinates
  Mat complement;  // dim_g x (dim_g - dim_l)
  AlgebraPtr algebra;
  std::optional<RootDatum> roots;

  int dim() const { return static_cast<int>(inclusion.cols()); }
  Vec embed(const Vec& x_l) const { return inclusion * x_l; }
};

struct Automorphism {
  Mat matrix;
  int order = 1;
  std::vector<Mat> eigenspaces;  // eigenspaces[j]: basis of ker(B - e^{2*pi*i*j/n})
};

RootedAlgebra build_sl(int n);

AlgebraPtr direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Levi subalgebra of sl_n spanned by the full Cartan and the root spaces
/// whose roots are supported on the given simple-root subset.
Subalgebra levi_subalgebra(const RootedAlgebra& g,
                           const std::vector<int>& simple_root_subset);

/// Cyclic block-permutation automorphism of an n-fold direct sum of
/// identical blocks of dimension block_dim.
Automorphism cyclic_automorphism(const LieAlgebra& g, int copies);

/// The fixed subalgebra of a cyclic automorphism of summand^{oplus n}, with
/// the summand's root datum transferred to the rescaled diagonal basis.
Subalgebra diagonal_subalgebra(AlgebraPtr sum, const RootedAlgebra& summand,
                               int copies);

/// The whole algebra viewed as a subalgebra of itself (identity inclusion).
Subalgebra full_subalgebra(const RootedAlgebra& g);

/// The Cartan subalgebra as an abelian subalgebra of g.
Subalgebra cartan_subalgebra(const RootedAlgebra& g);

/// Induced Lie algebra structure on a bracket-closed subspace.
AlgebraPtr induced_algebra(const LieAlgebra& parent, const Mat& basis,
                           std::vector<std::string> labels = {});

/// Complex Gram-Schmidt w.r.t. the bilinear form with the given coordinate
/// matrix; columns of the result X satisfy X^T F X = I. Handles isotropic
/// input vectors by mixing in later ones.
Mat bilinear_orthonormalize(const Mat& vectors, const Mat& form);

/// Basis {xi_i} of l orthonormal w.r.t. the form Omega_l^{-1}, where omega
/// is the coordinate matrix of the Casimir element. Throws ConstructionError
/// ("not factorizable") when omega is singular.
Mat orthonormal_basis_via_casimir(const LieAlgebra& l, const Mat& omega);

double bracket_preservation_residual(const LieAlgebra& g, const Mat& B);
double subalgebra_closure_residual(const LieAlgebra& g, const Mat& basis);

}  // namespace dynr

#endif
