#include "dynr/matfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace dynr {

namespace {

constexpr double kClusterGap = 1e-8;
constexpr double kNullCutoff = 1e-8;
constexpr double kDefectLimit = 1e-6;
constexpr double kSeriesRadius = 1e-3;

cplx coth(cplx z) { return 1.0 / std::tanh(z); }

/// Distance from s to the lattice {step * k + offset : k in Z}, optionally
/// excluding k = 0.
double lattice_distance(cplx s, cplx step, cplx offset, bool exclude_zero) {
  cplx t = (s - offset) / step;
  double d = std::numeric_limits<double>::infinity();
  double k0 = std::round(t.real());
  for (double k : {k0 - 1.0, k0, k0 + 1.0}) {
    if (exclude_zero && k == 0.0 && offset == cplx(0)) continue;
    d = std::min(d, std::abs(s - (step * k + offset)));
  }
  return d;
}

}  // namespace

std::optional<SpectralData> try_spectral_decompose(const Mat& a,
                                                   double* defect_out) {
  const int d = static_cast<int>(a.rows());
  Eigen::ComplexEigenSolver<Mat> es(a, /*computeEigenvectors=*/false);
  Vec w = es.eigenvalues();
  double scale = 1.0 + w.cwiseAbs().maxCoeff();

  SpectralData sd;
  std::vector<bool> used(d, false);
  std::vector<Mat> bases;
  int total = 0;
  for (int i = 0; i < d; ++i) {
    if (used[i]) continue;
    std::vector<int> cluster{i};
    used[i] = true;
    for (int j = i + 1; j < d; ++j)
      if (!used[j] && std::abs(w(j) - w(i)) < kClusterGap * scale) {
        cluster.push_back(j);
        used[j] = true;
      }
    cplx mu = 0;
    for (int k : cluster) mu += w(k);
    mu /= static_cast<double>(cluster.size());

    Eigen::JacobiSVD<Mat> svd(Mat(a - mu * Mat::Identity(d, d)),
                              Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int null_dim = 0;
    for (int k = 0; k < sv.size(); ++k)
      if (sv(k) <= kNullCutoff * scale) ++null_dim;
    if (null_dim < static_cast<int>(cluster.size())) {
      // geometric multiplicity below algebraic: defective
      if (defect_out) *defect_out = 1.0;
      return std::nullopt;
    }
    Mat basis = svd.matrixV().rightCols(null_dim);
    // eat extra used eigenvalues if the null space merged clusters
    if (null_dim > static_cast<int>(cluster.size())) {
      int extra = null_dim - static_cast<int>(cluster.size());
      for (int j = 0; j < d && extra > 0; ++j)
        if (!used[j] && std::abs(w(j) - mu) < 10 * kNullCutoff * scale) {
          used[j] = true;
          --extra;
        }
      if (extra > 0) {
        if (defect_out) *defect_out = 1.0;
        return std::nullopt;
      }
    }
    sd.eigenvalues.conservativeResize(sd.eigenvalues.size() + 1);
    sd.eigenvalues(sd.eigenvalues.size() - 1) = mu;
    sd.multiplicities.push_back(null_dim);
    bases.push_back(std::move(basis));
    total += null_dim;
  }
  if (total != d) {
    if (defect_out) *defect_out = 1.0;
    return std::nullopt;
  }

  Mat V(d, d);
  int col = 0;
  for (const Mat& b : bases) {
    V.middleCols(col, static_cast<int>(b.cols())) = b;
    col += static_cast<int>(b.cols());
  }
  Eigen::FullPivLU<Mat> lu(V);
  if (!lu.isInvertible()) {
    if (defect_out) *defect_out = 1.0;
    return std::nullopt;
  }
  Mat Vi = lu.inverse();
  col = 0;
  Mat recon = Mat::Zero(d, d);
  for (int c = 0; c < static_cast<int>(bases.size()); ++c) {
    int m = sd.multiplicities[c];
    Mat P = V.middleCols(col, m) * Vi.middleRows(col, m);
    recon += sd.eigenvalues(c) * P;
    sd.projectors.push_back(std::move(P));
    col += m;
  }
  sd.defect = (a - recon).cwiseAbs().maxCoeff() / scale;
  if (defect_out) *defect_out = sd.defect;
  if (sd.defect > kDefectLimit) return std::nullopt;
  return sd;
}

SpectralData spectral_decompose(const Mat& a) {
  double defect = 0.0;
  auto sd = try_spectral_decompose(a, &defect);
  if (!sd)
    throw NonSemisimpleError("spectral_decompose: non-semisimple element (defect " +
                             std::to_string(defect) + ")");
  return *sd;
}

// ---------------------------------------------------------------------------

ScalarFun ScalarFun::coth_scaled(cplx eps) {
  ScalarFun f;
  f.kind_ = Kind::CothScaled;
  f.eps_ = eps;
  return f;
}
ScalarFun ScalarFun::rational_trig_f0() {
  ScalarFun f;
  f.kind_ = Kind::RationalTrigF0;
  return f;
}
ScalarFun ScalarFun::trig_f0(cplx eps) {
  ScalarFun f;
  f.kind_ = Kind::TrigF0;
  f.eps_ = eps;
  return f;
}
ScalarFun ScalarFun::shifted_coth(cplx eps, int j, int n) {
  ScalarFun f;
  f.kind_ = Kind::ShiftedCoth;
  f.eps_ = eps;
  f.j_ = j;
  f.n_ = n;
  return f;
}
ScalarFun ScalarFun::half_ad_coth() {
  ScalarFun f;
  f.kind_ = Kind::HalfAdCoth;
  return f;
}
ScalarFun ScalarFun::exp_chart_left() {
  ScalarFun f;
  f.kind_ = Kind::ExpChartLeft;
  return f;
}
ScalarFun ScalarFun::exp_chart_right() {
  ScalarFun f;
  f.kind_ = Kind::ExpChartRight;
  return f;
}

bool ScalarFun::odd() const {
  return kind_ == Kind::CothScaled || kind_ == Kind::RationalTrigF0 ||
         kind_ == Kind::TrigF0;
}

std::string ScalarFun::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::CothScaled: os << "coth_scaled(eps=" << eps_ << ")"; break;
    case Kind::RationalTrigF0: os << "rational_trig_f0"; break;
    case Kind::TrigF0: os << "trig_f0(eps=" << eps_ << ")"; break;
    case Kind::ShiftedCoth:
      os << "shifted_coth(eps=" << eps_ << ",j=" << j_ << ",n=" << n_ << ")";
      break;
    case Kind::HalfAdCoth: os << "half_ad_coth"; break;
    case Kind::ExpChartLeft: os << "exp_chart_left"; break;
    case Kind::ExpChartRight: os << "exp_chart_right"; break;
  }
  return os.str();
}

double ScalarFun::pole_distance(cplx s) const {
  const cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
  switch (kind_) {
    case Kind::CothScaled:
      return lattice_distance(s, two_pi_i / eps_, 0.0, false);
    case Kind::RationalTrigF0:
      return lattice_distance(s, two_pi_i, 0.0, true);
    case Kind::TrigF0:
      return std::min(lattice_distance(s, two_pi_i, 0.0, true),
                      lattice_distance(s, two_pi_i / eps_, 0.0, true));
    case Kind::ShiftedCoth: {
      // (eps/2) s + i pi j / n = i pi k  =>  s = (2 pi i / eps)(k - j/n)
      cplx offset = (two_pi_i / eps_) * (-static_cast<double>(j_) / n_);
      return lattice_distance(s, two_pi_i / eps_, offset, false);
    }
    case Kind::HalfAdCoth:
    case Kind::ExpChartLeft:
    case Kind::ExpChartRight:
      return lattice_distance(s, two_pi_i, 0.0, true);
  }
  return std::numeric_limits<double>::infinity();
}

cplx ScalarFun::eval(cplx s) const {
  const bool removable =
      kind_ != Kind::CothScaled && kind_ != Kind::ShiftedCoth;
  if (removable && std::abs(s) < kSeriesRadius) {
    cplx s2 = s * s, s3 = s2 * s;
    switch (kind_) {
      case Kind::RationalTrigF0:
        return -s / 12.0 + s3 / 720.0;
      case Kind::TrigF0: {
        cplx e2 = eps_ * eps_;
        return (1.0 - e2) * s / 12.0 - (1.0 - e2 * e2) * s3 / 720.0;
      }
      case Kind::HalfAdCoth:
        return 1.0 + s2 / 12.0 - s2 * s2 / 720.0;
      case Kind::ExpChartLeft:
        return 1.0 + s / 2.0 + s2 / 12.0 - s2 * s2 / 720.0;
      case Kind::ExpChartRight:
        return 1.0 - s / 2.0 + s2 / 12.0 - s2 * s2 / 720.0;
      default: break;
    }
  }
  if (pole_distance(s) < pole_guard) {
    std::ostringstream os;
    os << "ScalarFun " << name() << ": argument " << s
       << " within guard distance " << pole_guard << " of a pole";
    throw PoleProximityError(os.str());
  }
  switch (kind_) {
    case Kind::CothScaled:
      return (eps_ / 2.0) * coth((eps_ / 2.0) * s);
    case Kind::RationalTrigF0:
      return 1.0 / s - 0.5 * coth(s / 2.0);
    case Kind::TrigF0:
      return 0.5 * coth(s / 2.0) - (eps_ / 2.0) * coth((eps_ / 2.0) * s);
    case Kind::ShiftedCoth:
      return -(eps_ / 2.0) *
             coth((eps_ / 2.0) * s +
                  cplx(0.0, std::numbers::pi * j_ / n_));
    case Kind::HalfAdCoth:
      return (s / 2.0) * coth(s / 2.0);
    case Kind::ExpChartLeft:
      return s / (1.0 - std::exp(-s));
    case Kind::ExpChartRight:
      return s / (std::exp(s) - 1.0);
  }
  return 0.0;
}

Mat apply_scalar(const ScalarFun& f, const SpectralData& s) {
  const int d = static_cast<int>(s.projectors.front().rows());
  Mat r = Mat::Zero(d, d);
  for (int c = 0; c < s.eigenvalues.size(); ++c) {
    cplx v;
    try {
      v = f.eval(s.eigenvalues(c));
    } catch (const PoleProximityError& e) {
      std::ostringstream os;
      os << e.what() << " (eigenvalue " << s.eigenvalues(c) << ")";
      throw PoleProximityError(os.str());
    }
    r += v * s.projectors[static_cast<size_t>(c)];
  }
  return r;
}

Mat apply_scalar_restricted(const ScalarFun& f, const Mat& a, const Mat& subspace) {
  // restricted matrix X: A C = C X
  Eigen::ColPivHouseholderQR<Mat> qr(subspace);
  Mat x = qr.solve(Mat(a * subspace));
  if ((subspace * x - a * subspace).cwiseAbs().maxCoeff() >
      1e-9 * (1.0 + a.cwiseAbs().maxCoeff()))
    throw ConstructionError("apply_scalar_restricted: subspace not invariant");
  return apply_scalar(f, spectral_decompose(x));
}

Mat apply_scalar_blocks(const Mat& a,
                        std::span<const std::pair<Mat, ScalarFun>> blocks) {
  const int d = static_cast<int>(a.rows());
  int total = 0;
  for (const auto& [basis, f] : blocks) total += static_cast<int>(basis.cols());
  if (total != d)
    throw ConstructionError("apply_scalar_blocks: block bases do not span");
  Mat P(d, d);
  int col = 0;
  for (const auto& [basis, f] : blocks) {
    P.middleCols(col, static_cast<int>(basis.cols())) = basis;
    col += static_cast<int>(basis.cols());
  }
  Eigen::FullPivLU<Mat> lu(P);
  if (!lu.isInvertible())
    throw ConstructionError("apply_scalar_blocks: block bases are degenerate");
  Mat F = Mat::Zero(d, d);
  col = 0;
  Mat Pinv = lu.inverse();
  for (const auto& [basis, f] : blocks) {
    const int k = static_cast<int>(basis.cols());
    Mat Fk = apply_scalar_restricted(f, a, basis);
    F += basis * Fk * Pinv.middleRows(col, k);
    col += k;
  }
  return F;
}

}  // namespace dynr
