#include "dynr/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace dynr {

namespace {

using nlohmann::json;

constexpr double kTolAnalytic = 1e-9;
constexpr double kTolFd = 1e-6;
constexpr double kTolAlgebraic = 1e-11;
constexpr double kTolExact = 1e-12;

struct Tolerances {
  double analytic = kTolAnalytic;
  double fd = kTolFd;
};

Tolerances tier_tolerances(const std::string& tier) {
  Tolerances t;
  if (tier == "analytic") {
    t.fd = kTolAnalytic;
  } else if (tier == "fd") {
    t.analytic = kTolFd;
  } else if (!tier.empty()) {
    throw ConstructionError("unknown tolerance tier: " + tier);
  }
  return t;
}

/// Portable deterministic draws: doubles are built from the raw mt19937_64
/// stream instead of std::uniform_real_distribution, whose mapping is
/// implementation-defined.
class Draw {
 public:
  Draw(std::uint64_t seed, double radius) : rng_(seed), radius_(radius) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  cplx coord() {
    const double scale = radius_ / std::sqrt(2.0);
    double re = scale * (2.0 * unit() - 1.0);
    double im = scale * (2.0 * unit() - 1.0);
    return {re, im};
  }

  Vec point(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = coord();
    return v;
  }

 private:
  std::mt19937_64 rng_;
  double radius_;
};

/// Every eigenvalue cluster is either numerically zero or at least `gap` away
/// from zero and from every other cluster. Keeps finite-difference steps from
/// crossing cluster boundaries.
bool spectrum_generic(const SpectralData& s, double gap) {
  const int m = static_cast<int>(s.eigenvalues.size());
  for (int i = 0; i < m; ++i) {
    cplx a = s.eigenvalues(i);
    if (std::abs(a) > 1e-8 && std::abs(a) < gap) return false;
    for (int j = i + 1; j < m; ++j)
      if (std::abs(a - s.eigenvalues(j)) < gap) return false;
  }
  return true;
}

void add_check(std::vector<ResidualReport>& out, const std::string& name,
               double abs, double tol, double denom = 1.0) {
  out.push_back(ResidualReport::make(name, Vec(), abs, denom, tol));
}

// ---------------------------------------------------------------------------
// Scenario definitions
// ---------------------------------------------------------------------------

using RunEps = std::function<void(cplx eps, const SamplePlan& plan, int samples,
                                  const Tolerances& tol, const RunOptions& opt,
                                  std::vector<ResidualReport>& out)>;

struct ScenarioDef {
  std::string name;
  std::string description;
  std::vector<cplx> default_eps;
  bool eps_fixed = false;  // scenario ignores --epsilon
  RunEps run;
};

Automorphism identity_automorphism(int dim) {
  Automorphism b;
  b.matrix = Mat::Identity(dim, dim);
  b.order = 1;
  b.eigenspaces = {Mat::Identity(dim, dim)};
  return b;
}

void run_structural(std::vector<ResidualReport>& out) {
  RootedAlgebra sl2 = build_sl(2);
  RootedAlgebra sl3 = build_sl(3);
  AlgebraPtr sum = direct_sum(*sl2.algebra, *sl2.algebra);
  Subalgebra levi = levi_subalgebra(sl3, {0});

  add_check(out, "structural_sl2", sl2.algebra->residuals().max(), kTolAlgebraic);
  add_check(out, "structural_sl3", sl3.algebra->residuals().max(), kTolAlgebraic);
  add_check(out, "structural_sl2_sl2", sum->residuals().max(), kTolAlgebraic);
  add_check(out, "structural_gl2_levi", levi.algebra->residuals().max(),
            kTolAlgebraic);

  auto qt_residual = [](const QuasiTriangular& qt) {
    return cyb(qt.r_skew + qt.omega * cplx(0.5)).max_norm();
  };
  QuasiTriangular q_sl2 = standard_qt(full_subalgebra(sl2));
  QuasiTriangular q_sl3 = standard_qt(full_subalgebra(sl3));
  QuasiTriangular q_levi = standard_qt(levi);
  QuasiTriangular q_diag = standard_qt(diagonal_subalgebra(sum, sl2, 2));
  add_check(out, "quasitriangular_sl2", qt_residual(q_sl2), kTolAlgebraic);
  add_check(out, "quasitriangular_sl3", qt_residual(q_sl3), kTolAlgebraic);
  add_check(out, "quasitriangular_gl2_levi", qt_residual(q_levi), kTolAlgebraic);
  add_check(out, "quasitriangular_diag_sl2", qt_residual(q_diag), kTolAlgebraic);

  auto casimir_defect = [](const AlgebraPtr& g) {
    return invariance_defect(casimir(g), Mat(Mat::Identity(g->dim(), g->dim())));
  };
  add_check(out, "casimir_invariance_sl2", casimir_defect(sl2.algebra),
            kTolAlgebraic);
  add_check(out, "casimir_invariance_sl3", casimir_defect(sl3.algebra),
            kTolAlgebraic);
  add_check(out, "casimir_invariance_sl2_sl2", casimir_defect(sum), kTolAlgebraic);

  auto z_defect = [](const AlgebraPtr& g) {
    return invariance_defect(z_element(casimir(g), 1.0),
                             Mat(Mat::Identity(g->dim(), g->dim())));
  };
  add_check(out, "z_invariance_sl2", z_defect(sl2.algebra), kTolAlgebraic);
  add_check(out, "z_invariance_sl3", z_defect(sl3.algebra), kTolAlgebraic);
}

RunEps make_cartan_scenario(int n) {
  return [n](cplx eps, const SamplePlan& plan, int samples, const Tolerances& tol,
             const RunOptions&, std::vector<ResidualReport>& out) {
    RootedAlgebra g = build_sl(n);
    Subalgebra full = full_subalgebra(g);
    AbelianBase base = cartan_base(full);
    const int rank = static_cast<int>(base.orthobasis.cols());

    ScalarFun prof_eps = ScalarFun::coth_scaled(eps);
    ScalarFun prof_one = ScalarFun::coth_scaled(1.0);
    auto admissible = [&](const Vec& m) {
      Vec lam = base.inclusion * m;
      for (const Root& r : g.roots.roots) {
        if (!r.positive) continue;
        cplx s = g.roots.pairing(r, lam);
        if (std::abs(s) < plan.root_pairing_min) return false;
        if (prof_eps.pole_distance(s) < plan.pole_guard) return false;
        // the dilation identity also evaluates the eps = 1 profile at eps*s
        if (prof_one.pole_distance(eps * s) < plan.pole_guard) return false;
      }
      return true;
    };
    auto points = sample_points(plan, rank, samples, admissible);

    Tensor3 z = z_element(casimir(g.algebra), eps);
    TensorFn r_fn = [&](const Vec& m) {
      return rho_cartan(g, eps, Vec(base.inclusion * m));
    };
    AnalyticDirectional analytic = [&](const Vec& m, const Vec& v) {
      return rho_cartan_derivative(g, eps, Vec(base.inclusion * m),
                                   Vec(base.inclusion * v));
    };

    for (const Vec& m : points) {
      out.push_back(
          cdybe_residual_abelian(r_fn, base, m, z, tol.analytic, &analytic));
      Vec lam = base.inclusion * m;
      out.push_back(ResidualReport::make(
          "dilation", m, dilation_residual(g, eps, lam),
          relative_denominator(rho_cartan(g, eps, lam)), kTolExact));
    }
  };
}

void run_es_sl2(cplx, const SamplePlan& plan, int samples, const Tolerances& tol,
                const RunOptions&, std::vector<ResidualReport>& out) {
  RootedAlgebra g = build_sl(2);
  Subalgebra g0 = full_subalgebra(g);
  Automorphism b = identity_automorphism(g0.dim());
  AbelianBase base = full_base(g0);
  Tensor3 z = z_element(casimir(g.algebra), 1.0);

  TensorFn r_fn = [&](const Vec& lam) { return rmat_es(g0, b, lam); };
  auto admissible = [&](const Vec& v) {
    BasePoint p = make_base_point(*g0.algebra, v, Chart::abelian);
    if (p.semisimple_defect > plan.semisimple_defect_max) return false;
    if (!spectrum_generic(p.ad_spectrum, plan.root_pairing_min)) return false;
    r_fn(v);  // pole-guard probe
    return true;
  };
  auto points = sample_points(plan, g0.dim(), samples, admissible);

  for (const Vec& lam : points) {
    BasePoint p = make_base_point(*g0.algebra, lam, Chart::abelian);
    out.push_back(cdybe_residual_abelian(r_fn, base, lam, z, tol.fd));
    out.push_back(invariance_residual(r_fn, g0, p, tol.fd));
  }
}

struct PlContext {
  QuasiTriangular qt;
  Automorphism b;
  Tensor3 z;
  Tensor3 z_l;
};

PlContext fm_sl2_context(cplx eps) {
  RootedAlgebra g = build_sl(2);
  PlContext c;
  c.qt = standard_qt(full_subalgebra(g));
  c.b = identity_automorphism(c.qt.sub.dim());
  c.z = z_element(casimir(g.algebra), eps);
  c.z_l = embed_tensor(c.qt.sub, cyb(c.qt.r_skew));
  return c;
}

PlContext fm_swap_context(cplx eps) {
  RootedAlgebra summand = build_sl(2);
  AlgebraPtr sum = direct_sum(*summand.algebra, *summand.algebra);
  PlContext c;
  c.b = cyclic_automorphism(*sum, 2);
  c.qt = standard_qt(diagonal_subalgebra(sum, summand, 2));
  c.z = z_element(casimir(sum), eps);
  c.z_l = embed_tensor(c.qt.sub, cyb(c.qt.r_skew));
  return c;
}

/// Residual battery shared by every Poisson-Lie scenario: reduced and full
/// dynamical Yang-Baxter forms, verdict agreement, the quasi-invariance /
/// invariance pair, and their gap against the finite-difference error budget.
void pl_sample_checks(const QuasiTriangular& qt, const TensorFn& r_fn,
                      const TensorFn& rp_fn, const Tensor3& z, const Tensor3& z_l,
                      const Vec& lam, double fd_tol,
                      std::vector<ResidualReport>& out) {
  BasePoint p = make_base_point(*qt.sub.algebra, lam, Chart::sts);

  ResidualReport reduced = cdybe_residual_reduced(rp_fn, qt, p, z, z_l, fd_tol);
  ResidualReport pl = cdybe_residual_pl(r_fn, qt, p, z, fd_tol);
  ResidualReport agree = ResidualReport::make(
      "equivalence_agreement", lam, (reduced.pass == pl.pass) ? 0.0 : 1.0, 1.0,
      0.5);

  ResidualReport quasi = quasi_invariance_residual(r_fn, qt, p, fd_tol);
  ResidualReport inv = invariance_residual(rp_fn, qt.sub, p, fd_tol);
  double gap_budget = quasi.metadata["fd_error_estimate"] +
                      inv.metadata["fd_error_estimate"] + 1e-12;
  ResidualReport gap = ResidualReport::make(
      "equivalence_gap", lam, std::abs(quasi.residual_abs - inv.residual_abs),
      1.0, gap_budget);
  gap.metadata["fd_error_budget"] = gap_budget;

  out.push_back(std::move(reduced));
  out.push_back(std::move(pl));
  out.push_back(std::move(agree));
  out.push_back(std::move(quasi));
  out.push_back(std::move(inv));
  out.push_back(std::move(gap));
}

std::function<bool(const Vec&)> pl_admissibility(const PlContext& c,
                                                 const TensorFn& r_fn,
                                                 const SamplePlan& plan) {
  return [&c, &r_fn, &plan](const Vec& v) {
    BasePoint p = make_base_point(*c.qt.sub.algebra, v, Chart::sts);
    if (p.semisimple_defect > plan.semisimple_defect_max) return false;
    if (!spectrum_generic(p.ad_spectrum, plan.root_pairing_min)) return false;
    r_fn(v);  // pole-guard probe through every graded block
    return true;
  };
}

RunEps make_fm_scenario(bool swapped) {
  return [swapped](cplx eps, const SamplePlan& plan, int samples,
                   const Tolerances& tol, const RunOptions&,
                   std::vector<ResidualReport>& out) {
    PlContext c = swapped ? fm_swap_context(eps) : fm_sl2_context(eps);
    TensorFn r_fn = [&](const Vec& lam) { return rmat_fm(c.qt, c.b, eps, lam).r; };
    TensorFn rp_fn = [&](const Vec& lam) {
      return rmat_fm(c.qt, c.b, eps, lam).r_prime;
    };
    auto points =
        sample_points(plan, c.qt.sub.dim(), samples, pl_admissibility(c, r_fn, plan));
    for (const Vec& lam : points)
      pl_sample_checks(c.qt, r_fn, rp_fn, c.z, c.z_l, lam, tol.fd, out);
  };
}

struct LeviContext {
  RootedAlgebra g;
  PlContext pl;
};

LeviContext levi_context(cplx eps) {
  LeviContext c;
  c.g = build_sl(3);
  c.pl.qt = standard_qt(levi_subalgebra(c.g, {0}));
  c.pl.z = z_element(casimir(c.g.algebra), eps);
  c.pl.z_l = embed_tensor(c.pl.qt.sub, cyb(c.pl.qt.r_skew));
  return c;
}

Vec cartan_projection(const Subalgebra& l, const Vec& lam) {
  Vec out = Vec::Zero(l.dim());
  for (int k : l.roots->cartan_indices) out(k) = lam(k);
  return out;
}

bool cartan_point_admissible(const LeviContext& c, const Vec& lam_h, cplx eps,
                             const SamplePlan& plan) {
  const Subalgebra& l = c.pl.qt.sub;
  Vec lam_g = l.embed(lam_h);
  ScalarFun prof_eps = ScalarFun::coth_scaled(eps);
  ScalarFun prof_one = ScalarFun::coth_scaled(1.0);
  for (const Root& r : c.g.roots.roots) {
    if (!r.positive) continue;
    cplx s = c.g.roots.pairing(r, lam_g);
    if (std::abs(s) < plan.root_pairing_min) return false;
    if (prof_eps.pole_distance(s) < plan.pole_guard) return false;
    if (prof_one.pole_distance(s) < plan.pole_guard) return false;
  }
  return true;
}

void run_levi(cplx eps, const SamplePlan& plan, int samples, const Tolerances& tol,
              const RunOptions&, std::vector<ResidualReport>& out) {
  LeviContext c = levi_context(eps);
  const PlContext& pc = c.pl;
  TensorFn r_fn = [&](const Vec& lam) { return rmat_levi(pc.qt, eps, lam).r; };
  TensorFn rp_fn = [&](const Vec& lam) {
    return rmat_levi(pc.qt, eps, lam).r_prime;
  };

  auto generic_ok = pl_admissibility(pc, r_fn, plan);
  auto admissible = [&](const Vec& v) {
    if (!generic_ok(v)) return false;
    return cartan_point_admissible(c, cartan_projection(pc.qt.sub, v), eps, plan);
  };
  auto points = sample_points(plan, pc.qt.sub.dim(), samples, admissible);

  for (const Vec& lam : points) {
    pl_sample_checks(pc.qt, r_fn, rp_fn, pc.z, pc.z_l, lam, tol.fd, out);

    Vec lam_h = cartan_projection(pc.qt.sub, lam);
    ReductionResult red =
        reduction_crosscheck(r_fn, c.g, pc.qt, eps, lam_h, tol.analytic);
    out.push_back(red.abelian);
    out.push_back(ResidualReport::make("restriction_identity", lam_h,
                                       red.restriction_identity, 1.0,
                                       tol.analytic));
  }
}

void run_chart_consistency(cplx, const SamplePlan& plan, int samples,
                           const Tolerances&, const RunOptions&,
                           std::vector<ResidualReport>& out) {
  RootedAlgebra sl2 = build_sl(2);
  RootedAlgebra sl3 = build_sl(3);
  Subalgebra levi = levi_subalgebra(sl3, {0});

  auto run_part = [&](const AlgebraPtr& alg, const std::string& tag,
                      std::uint64_t seed_shift) {
    SamplePlan part = plan;
    part.seed = plan.seed + seed_shift;
    auto admissible = [&](const Vec& v) {
      BasePoint p = make_base_point(*alg, v, Chart::sts);
      return p.semisimple_defect <= plan.semisimple_defect_max &&
             spectrum_generic(p.ad_spectrum, plan.root_pairing_min);
    };
    auto points = sample_points(part, alg->dim(), samples, admissible);
    for (const Vec& lam : points) {
      BasePoint p = make_base_point(*alg, lam, Chart::sts);
      ChartConsistency cc = chart_consistency_residuals(*alg, p);
      out.push_back(ResidualReport::make("chart_difference_" + tag, lam,
                                         cc.difference_identity, 1.0,
                                         kTolAlgebraic));
      out.push_back(ResidualReport::make("chart_mean_" + tag, lam,
                                         cc.mean_identity, 1.0, kTolAlgebraic));
    }
  };
  run_part(sl2.algebra, "sl2", 0);
  run_part(levi.algebra, "gl2_levi", 1);

  // Closed-form profile identities at sampled arguments.
  Draw draw(plan.seed + 2, 1.5);
  ScalarFun f_trig = ScalarFun::trig_f0(1.0);
  ScalarFun f_shift = ScalarFun::shifted_coth(1.0, 1, 2);
  double worst_trig = 0.0, worst_shift = 0.0;
  int done = 0;
  while (done < std::max(samples, 1)) {
    cplx s = draw.coord();
    if (f_trig.pole_distance(s) < 0.2 || std::abs(s) < 1e-2) continue;
    worst_trig = std::max(worst_trig, std::abs(f_trig.eval(s)));
    worst_shift =
        std::max(worst_shift, std::abs(f_shift.eval(s) + 0.5 * std::tanh(s / 2.0)));
    ++done;
  }
  add_check(out, "profile_trig_f0_vanishes_at_eps1", worst_trig, kTolExact);
  add_check(out, "profile_shifted_coth_is_minus_half_tanh", worst_shift, kTolExact);
}

void run_neg_perturbed(cplx eps, const SamplePlan& plan, int samples,
                       const Tolerances& tol, const RunOptions&,
                       std::vector<ResidualReport>& out) {
  LeviContext c = levi_context(eps);
  const PlContext& pc = c.pl;
  const int d = c.g.algebra->dim();

  Draw draw(plan.seed ^ 0x9e3779b97f4a7c15ULL, 1.0);
  Mat noise(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) noise(i, j) = draw.coord();
  Mat skew = noise - noise.transpose();
  Tensor2 pert(c.g.algebra, Mat(0.05 * skew / skew.cwiseAbs().maxCoeff()));

  TensorFn r_fn = [&](const Vec& lam) {
    return rmat_levi(pc.qt, eps, lam).r + pert;
  };
  TensorFn rp_fn = [&](const Vec& lam) {
    return rmat_levi(pc.qt, eps, lam).r_prime + pert;
  };

  auto points =
      sample_points(plan, pc.qt.sub.dim(), samples, pl_admissibility(pc, r_fn, plan));
  for (const Vec& lam : points) {
    BasePoint p = make_base_point(*pc.qt.sub.algebra, lam, Chart::sts);
    ResidualReport reduced =
        cdybe_residual_reduced(rp_fn, pc.qt, p, pc.z, pc.z_l, tol.fd);
    ResidualReport pl = cdybe_residual_pl(r_fn, pc.qt, p, pc.z, tol.fd);
    ResidualReport joint = ResidualReport::make(
        "joint_failure", lam, (!reduced.pass && !pl.pass) ? 0.0 : 1.0, 1.0, 0.5);
    out.push_back(std::move(reduced));
    out.push_back(std::move(pl));
    out.push_back(std::move(joint));
  }
}

void run_neg_wrong_epsilon(cplx eps, const SamplePlan& plan, int samples,
                           const Tolerances& tol, const RunOptions&,
                           std::vector<ResidualReport>& out) {
  LeviContext c = levi_context(eps);
  const PlContext& pc = c.pl;
  TensorFn r_fn = [&](const Vec& lam) { return rmat_levi(pc.qt, eps, lam).r; };
  const std::vector<int>& ci = pc.qt.sub.roots->cartan_indices;

  auto admissible = [&](const Vec& m) {
    Vec lam_h = Vec::Zero(pc.qt.sub.dim());
    for (size_t k = 0; k < ci.size(); ++k) lam_h(ci[k]) = m(k);
    return cartan_point_admissible(c, lam_h, eps, plan);
  };
  auto points =
      sample_points(plan, static_cast<int>(ci.size()), samples, admissible);

  for (const Vec& m : points) {
    Vec lam_h = Vec::Zero(pc.qt.sub.dim());
    for (size_t k = 0; k < ci.size(); ++k) lam_h(ci[k]) = m(k);
    ReductionResult red = reduction_crosscheck(r_fn, c.g, pc.qt, eps, lam_h,
                                               tol.analytic, eps + 0.7);
    red.abelian.metadata["epsilon_override_offset"] = 0.7;
    out.push_back(red.abelian);
  }
}

void run_neg_zl_sign(cplx eps, const SamplePlan& plan, int samples,
                     const Tolerances& tol, const RunOptions&,
                     std::vector<ResidualReport>& out) {
  PlContext c = fm_sl2_context(eps);
  TensorFn r_fn = [&](const Vec& lam) { return rmat_fm(c.qt, c.b, eps, lam).r; };
  TensorFn rp_fn = [&](const Vec& lam) {
    return rmat_fm(c.qt, c.b, eps, lam).r_prime;
  };
  auto points =
      sample_points(plan, c.qt.sub.dim(), samples, pl_admissibility(c, r_fn, plan));
  for (const Vec& lam : points) {
    BasePoint p = make_base_point(*c.qt.sub.algebra, lam, Chart::sts);
    out.push_back(
        cdybe_residual_reduced(rp_fn, c.qt, p, c.z, c.z_l, tol.fd, /*zl_sign=*/-1));
  }
}

CustomConfig require_config(const RunOptions& opt) {
  if (opt.config_path.empty())
    throw ConstructionError("this scenario requires --config <file>");
  return load_config(opt.config_path);
}

Subalgebra identity_subalgebra(const AlgebraPtr& alg) {
  Subalgebra sub;
  sub.parent = alg;
  sub.inclusion = Mat::Identity(alg->dim(), alg->dim());
  sub.complement = Mat::Zero(alg->dim(), 0);
  sub.algebra = alg;
  return sub;
}

void run_custom_structural(cplx, const SamplePlan&, int, const Tolerances&,
                           const RunOptions& opt,
                           std::vector<ResidualReport>& out) {
  CustomConfig cfg = require_config(opt);
  const StructuralResiduals& res = cfg.algebra->residuals();
  add_check(out, "custom_antisymmetry", res.antisymmetry, kTolAlgebraic);
  add_check(out, "custom_jacobi", res.jacobi, kTolAlgebraic);
  add_check(out, "custom_form_invariance", res.form_invariance, kTolAlgebraic);
  if (cfg.has_qt) {
    QuasiTriangular qt =
        make_qt(identity_subalgebra(cfg.algebra), cfg.qt_r_skew, cfg.qt_omega);
    add_check(out, "custom_quasitriangular",
              cyb(qt.r_skew + qt.omega * cplx(0.5)).max_norm(), kTolAlgebraic);
  }
}

void run_custom_fm(cplx eps, const SamplePlan& plan, int samples,
                   const Tolerances& tol, const RunOptions& opt,
                   std::vector<ResidualReport>& out) {
  CustomConfig cfg = require_config(opt);
  if (!cfg.has_qt)
    throw ConstructionError(
        "custom-fm requires r/omega entries in the config file");
  PlContext c;
  c.qt = make_qt(identity_subalgebra(cfg.algebra), cfg.qt_r_skew, cfg.qt_omega);
  c.b = identity_automorphism(cfg.algebra->dim());
  c.z = z_element(casimir(cfg.algebra), eps);
  c.z_l = embed_tensor(c.qt.sub, cyb(c.qt.r_skew));

  TensorFn r_fn = [&](const Vec& lam) { return rmat_fm(c.qt, c.b, eps, lam).r; };
  TensorFn rp_fn = [&](const Vec& lam) {
    return rmat_fm(c.qt, c.b, eps, lam).r_prime;
  };
  auto points =
      sample_points(plan, c.qt.sub.dim(), samples, pl_admissibility(c, r_fn, plan));
  for (const Vec& lam : points)
    pl_sample_checks(c.qt, r_fn, rp_fn, c.z, c.z_l, lam, tol.fd, out);
}

const std::vector<ScenarioDef>& registry() {
  static const std::vector<ScenarioDef> defs = [] {
    std::vector<ScenarioDef> v;

    v.push_back({"structural",
                 "Algebraic self-checks on sl2, sl3, sl2+sl2 and the gl2 Levi "
                 "subalgebra of sl3: bracket antisymmetry, the Jacobi identity, "
                 "invariance of the bilinear form, CYB(r_l + Omega_l/2) = 0 for "
                 "every quasitriangular structure, and invariance of the "
                 "Casimir and of the Z-element. All checks are sample-free and "
                 "compare against 1e-11.",
                 {1.0},
                 true,
                 [](cplx e, const SamplePlan& p, int s, const Tolerances& t,
                    const RunOptions& o, std::vector<ResidualReport>& out) {
                   (void)e, (void)p, (void)s, (void)t, (void)o;
                   run_structural(out);
                 }});

    v.push_back({"cartan-sl2",
                 "Trigonometric r-matrix over the Cartan subalgebra of sl2: "
                 "the abelian dynamical Yang-Baxter residual Alt(sum_i x_i (x) "
                 "d_i r) + CYB(r) - Z via the analytic derivative (1e-9), and "
                 "the dilation identity r(eps, lambda) = eps r(1, eps lambda) "
                 "(1e-12). Epsilon defaults: 0.5, 1, 2, 1+0.3i.",
                 {0.5, 1.0, 2.0, cplx(1.0, 0.3)},
                 false,
                 make_cartan_scenario(2)});

    v.push_back({"cartan-sl3",
                 "Same battery as cartan-sl2 on the rank-2 Cartan of sl3: "
                 "abelian dynamical Yang-Baxter residual (analytic path, 1e-9) "
                 "and dilation covariance (1e-12).",
                 {0.5, 1.0, 2.0, cplx(1.0, 0.3)},
                 false,
                 make_cartan_scenario(3)});

    v.push_back({"es-sl2",
                 "Rational-trigonometric r-matrix over the whole of sl2 as an "
                 "abelian base (profile 1/s - (1/2)coth(s/2) of ad lambda): "
                 "abelian dynamical Yang-Baxter residual with finite-difference "
                 "derivatives (1e-6) plus equivariance of the r-matrix. The "
                 "profile fixes epsilon = 1; --epsilon is ignored.",
                 {1.0},
                 true,
                 run_es_sl2});

    v.push_back({"fm-sl2",
                 "Trigonometric r-matrix on sl2 with the identity grading over "
                 "the Poisson-Lie base: reduced-form residual on the invariant "
                 "part r', group-chart residual on r, verdict agreement of the "
                 "two forms, quasi-invariance of r, invariance of r', and the "
                 "gap between the last two against the finite-difference error "
                 "budget. Tolerance 1e-6; epsilon defaults 0.5 and 2.",
                 {0.5, 2.0},
                 false,
                 make_fm_scenario(false)});

    v.push_back({"fm-sl2x2-swap",
                 "Same battery as fm-sl2 for the order-2 swap automorphism of "
                 "sl2+sl2, with base the diagonal sl2 and graded shifted-coth "
                 "profiles on the anti-diagonal eigenspace.",
                 {0.5, 2.0},
                 false,
                 make_fm_scenario(true)});

    v.push_back({"levi-sl3-gl2",
                 "Levi-type r-matrix for the gl2 Levi subalgebra of sl3 over "
                 "the Poisson-Lie base: the fm-sl2 residual battery (1e-6), "
                 "plus the base-reduction cross-check at Cartan-supported "
                 "points: r|_h + r_l + rho_l(1, .) must equal the Cartan "
                 "r-matrix of sl3 entrywise (1e-9) and satisfy the abelian "
                 "dynamical Yang-Baxter equation (1e-9, analytic path).",
                 {0.5, 2.0},
                 false,
                 run_levi});

    v.push_back({"chart-consistency",
                 "Exponential-chart identities at sampled base points of sl2 "
                 "and the gl2 Levi: xi_left - xi_right = ad(lambda) xi and "
                 "(xi_left + xi_right)/2 = (ad/2)coth(ad/2) xi (1e-11), plus "
                 "the closed-form profile identities: the trigonometric "
                 "profile vanishes at epsilon = 1 and the shifted coth with "
                 "j=1, n=2 equals -(1/2)tanh(s/2) (1e-12).",
                 {1.0},
                 true,
                 run_chart_consistency});

    v.push_back({"neg-perturbed",
                 "Negative control: a fixed random skew perturbation (scale "
                 "0.05) is added to the Levi r-matrix. Both the reduced-form "
                 "and group-chart residuals must fail, and must fail jointly "
                 "on every sample. A failing exit code here is the expected "
                 "outcome.",
                 {1.0},
                 false,
                 run_neg_perturbed});

    v.push_back({"neg-wrong-epsilon",
                 "Negative control: the base-reduction cross-check is run with "
                 "the Z-element taken at epsilon + 0.7 instead of epsilon. The "
                 "abelian residual must fail on every sample; exit code 1 is "
                 "the expected outcome.",
                 {1.0},
                 false,
                 run_neg_wrong_epsilon});

    v.push_back({"neg-zl-sign",
                 "Negative control: the reduced-form residual on fm-sl2 with "
                 "the sign of the CYB(r_l) correction flipped. Every sample "
                 "must fail; exit code 1 is the expected outcome.",
                 {1.0},
                 false,
                 run_neg_zl_sign});

    v.push_back({"custom-structural",
                 "Structural checks (antisymmetry, Jacobi, form invariance, "
                 "and quasitriangularity when r/omega are present) for an "
                 "algebra supplied via --config.",
                 {1.0},
                 true,
                 run_custom_structural});

    v.push_back({"custom-fm",
                 "The fm residual battery for a user-supplied factorizable "
                 "algebra (--config with r and omega entries), with the "
                 "identity grading. Default epsilon 0.7 (at epsilon = 1 the "
                 "trigonometric profile vanishes identically).",
                 {0.7},
                 false,
                 run_custom_fm});

    return v;
  }();
  return defs;
}

const ScenarioDef& find_scenario(const std::string& name) {
  for (const ScenarioDef& d : registry())
    if (d.name == name) return d;
  throw ConstructionError("unknown scenario: " + name);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json report_json(const ResidualReport& r, cplx eps) {
  json lam = json::array();
  for (int i = 0; i < r.lambda.size(); ++i) lam.push_back(complex_json(r.lambda(i)));
  json j;
  j["check"] = r.scenario;
  j["epsilon"] = complex_json(eps);
  j["lambda"] = lam;
  j["residual_abs"] = r.residual_abs;
  j["residual_rel"] = r.residual_rel;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["metadata"] = json(r.metadata);
  return j;
}

}  // namespace

std::vector<Vec> sample_points(const SamplePlan& plan, int dim, int count,
                               const std::function<bool(const Vec&)>& admissible,
                               int* rejected) {
  Draw draw(plan.seed, plan.radius);
  std::vector<Vec> out;
  out.reserve(count);
  int consecutive = 0, total_rejected = 0;
  while (static_cast<int>(out.size()) < count) {
    Vec v = draw.point(dim);
    bool ok = false;
    try {
      ok = admissible(v);
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok) {
      out.push_back(std::move(v));
      consecutive = 0;
    } else {
      ++consecutive;
      ++total_rejected;
      if (consecutive > 10000)
        throw ConstructionError(
            "sampling region too constrained: 10000 consecutive rejections");
    }
  }
  if (rejected) *rejected = total_rejected;
  return out;
}

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> out;
  for (const ScenarioDef& d : registry()) {
    std::string brief = d.description.substr(0, d.description.find(':'));
    out.push_back({d.name, brief});
  }
  return out;
}

std::string describe_scenario(const std::string& name) {
  const ScenarioDef& d = find_scenario(name);
  std::ostringstream os;
  os << d.name << "\n\n" << d.description << "\n\nDefault epsilon values:";
  for (cplx e : d.default_eps) {
    os << " " << e.real();
    if (e.imag() != 0.0) os << (e.imag() > 0 ? "+" : "") << e.imag() << "i";
  }
  if (d.eps_fixed) os << " (fixed)";
  os << "\n";
  return os.str();
}

RunResult run_scenario(const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  RunResult res;
  try {
    const ScenarioDef& def = find_scenario(opt.scenario);
    Tolerances tol = tier_tolerances(opt.tolerance_tier);
    std::vector<cplx> eps_list = def.default_eps;
    if (!opt.epsilons.empty() && !def.eps_fixed) eps_list = opt.epsilons;

    json checks = json::array();
    int passed = 0, failed = 0;
    double max_rel = 0.0;
    for (std::size_t k = 0; k < eps_list.size(); ++k) {
      SamplePlan plan;
      plan.radius = opt.radius;
      plan.seed = opt.seed + 7919ULL * k;
      std::vector<ResidualReport> reports;
      def.run(eps_list[k], plan, opt.samples, tol, opt, reports);
      for (const ResidualReport& r : reports) {
        checks.push_back(report_json(r, eps_list[k]));
        (r.pass ? passed : failed) += 1;
        max_rel = std::max(max_rel, r.residual_rel);
      }
    }

    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    res.report["scenario"] = opt.scenario;
    res.report["seed"] = opt.seed;
    res.report["samples"] = opt.samples;
    res.report["radius"] = opt.radius;
    res.report["checks"] = checks;
    res.report["summary"] = {{"total", passed + failed},
                             {"passed", passed},
                             {"failed", failed},
                             {"max_residual_rel", max_rel},
                             {"vacuous", passed + failed == 0},
                             {"wall_ms", wall_ms}};
    res.exit_code = failed > 0 ? 1 : 0;
  } catch (const std::exception& e) {
    res.report = json{{"scenario", opt.scenario}, {"error", e.what()}};
    res.exit_code = 2;
  }
  return res;
}

cplx parse_complex(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw ConstructionError("empty complex literal");
  auto parse_real = [](const std::string& t) {
    try {
      std::size_t used = 0;
      double v = std::stod(t, &used);
      if (used != t.size()) throw ConstructionError("bad numeric literal: " + t);
      return v;
    } catch (const std::logic_error&) {
      throw ConstructionError("bad numeric literal: " + t);
    }
  };
  std::size_t ipos = s.find('i');
  if (ipos == std::string::npos) return {parse_real(s), 0.0};
  if (ipos != s.size() - 1)
    throw ConstructionError("bad complex literal: " + text);
  std::string body = s.substr(0, s.size() - 1);
  // split at the last +/- that is not a leading sign or part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') &&
        body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  auto imag_part = [&](std::string t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split)),
          imag_part(body.substr(split))};
}

CustomConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open config file: " + path);

  int dim = -1;
  std::vector<std::string> labels;
  std::vector<Mat> ad;
  Mat gram, r_coords, omega_coords;
  bool has_r = false, has_omega = false;

  auto require_dim = [&](const std::string& where) {
    if (dim < 0)
      throw ConstructionError("config: 'dim' must precede '" + where + "'");
  };
  auto check_index = [&](int i, const std::string& where) {
    if (i < 0 || i >= dim)
      throw ConstructionError("config: index out of range in '" + where + "'");
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    auto fail = [&](const std::string& msg) {
      throw ConstructionError("config line " + std::to_string(lineno) + ": " +
                              msg);
    };
    auto read_value = [&]() {
      double re = 0.0, im = 0.0;
      if (!(ls >> re)) fail("missing numeric value");
      ls >> im;  // optional imaginary part
      return cplx(re, im);
    };

    if (key == "dim") {
      if (!(ls >> dim) || dim <= 0) fail("bad dimension");
      labels.assign(dim, "");
      for (int i = 0; i < dim; ++i) labels[i] = "u" + std::to_string(i);
      ad.assign(dim, Mat::Zero(dim, dim));
      gram = Mat::Zero(dim, dim);
      r_coords = Mat::Zero(dim, dim);
      omega_coords = Mat::Zero(dim, dim);
    } else if (key == "label") {
      require_dim(key);
      int i;
      std::string name;
      if (!(ls >> i >> name)) fail("expected: label <index> <name>");
      check_index(i, key);
      labels[i] = name;
    } else if (key == "c") {
      require_dim(key);
      int i, j, k;
      if (!(ls >> i >> j >> k)) fail("expected: c <i> <j> <k> <re> [im]");
      check_index(i, key), check_index(j, key), check_index(k, key);
      cplx v = read_value();
      ad[i](k, j) = v;
      ad[j](k, i) = -v;
    } else if (key == "gram") {
      require_dim(key);
      int i, j;
      if (!(ls >> i >> j)) fail("expected: gram <i> <j> <re> [im]");
      check_index(i, key), check_index(j, key);
      cplx v = read_value();
      gram(i, j) = v;
      gram(j, i) = v;
    } else if (key == "r") {
      require_dim(key);
      int i, j;
      if (!(ls >> i >> j)) fail("expected: r <i> <j> <re> [im]");
      check_index(i, key), check_index(j, key);
      cplx v = read_value();
      r_coords(i, j) = v;
      r_coords(j, i) = -v;
      has_r = true;
    } else if (key == "omega") {
      require_dim(key);
      int i, j;
      if (!(ls >> i >> j)) fail("expected: omega <i> <j> <re> [im]");
      check_index(i, key), check_index(j, key);
      cplx v = read_value();
      omega_coords(i, j) = v;
      omega_coords(j, i) = v;
      has_omega = true;
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (dim < 0) throw ConstructionError("config: missing 'dim' directive");
  if (has_r != has_omega)
    throw ConstructionError("config: r and omega must be given together");

  CustomConfig cfg;
  cfg.algebra = std::make_shared<const LieAlgebra>(std::move(labels),
                                                   std::move(ad), gram);
  cfg.has_qt = has_r;
  cfg.qt_r_skew = std::move(r_coords);
  cfg.qt_omega = std::move(omega_coords);
  return cfg;
}

}  // namespace dynr
