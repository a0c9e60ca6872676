#include "orbitq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "orbitq/error.hpp"

namespace orbitq {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cd = std::complex<double>;

constexpr cd I{0.0, 1.0};

MatrixXcd mat2(cd a, cd b, cd c, cd d) {
  MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

VectorXd realify(const MatrixXcd& m) {
  VectorXd v(2 * m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    v(2 * i) = m.data()[i].real();
    v(2 * i + 1) = m.data()[i].imag();
  }
  return v;
}

/// Orthonormal (Euclidean) basis of the column space of a projector.
MatrixXd range_basis(const MatrixXd& proj) {
  Eigen::JacobiSVD<MatrixXd> svd(proj, Eigen::ComputeFullU);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 0.5) ++r;
  return svd.matrixU().leftCols(r);
}

/// Basis of the null space of m (columns), singular values below tol.
MatrixXd null_space(const MatrixXd& m, double tol) {
  if (m.cols() == 0) return MatrixXd(0, 0);
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeFullV);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

int count_small_singular_values(const MatrixXd& m, double tol) {
  if (m.cols() == 0) return 0;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  int small = static_cast<int>(m.cols() - svd.singularValues().size());
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) <= tol) ++small;
  return small;
}

void check_length(const NumericLieAlgebra& alg, const VectorXd& v, std::string_view what) {
  if (v.size() != alg.dim())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                                  ", expected " + std::to_string(alg.dim()) + " for " + alg.name());
}

void check_in_p(const NumericLieAlgebra& alg, const VectorXd& x, std::string_view what) {
  const double off = (alg.projector_k() * x).norm();
  if (off > tolerance::kMembership * std::max(1.0, x.norm()))
    throw Error(ErrorCode::NotInP, std::string(what) + " has a k-component of norm " + std::to_string(off));
}

}  // namespace

// ---------------------------------------------------------------------------
// NumericLieAlgebra

VectorXd NumericLieAlgebra::bracket(const VectorXd& x, const VectorXd& y) const { return ad(x) * y; }

MatrixXd NumericLieAlgebra::ad(const VectorXd& x) const {
  MatrixXd out = MatrixXd::Zero(dim(), dim());
  for (int a = 0; a < dim(); ++a)
    if (x(a) != 0.0) out += x(a) * ad_basis_[a];
  return out;
}

MatrixXcd NumericLieAlgebra::to_matrix(const VectorXd& x) const {
  MatrixXcd m = MatrixXcd::Zero(2, 2);
  for (int a = 0; a < dim(); ++a) m += x(a) * basis_[a];
  return m;
}

VectorXd NumericLieAlgebra::coordinates(const MatrixXcd& m, double* residual) const {
  const VectorXd target = realify(m);
  VectorXd c = realified_pinv_ * target;
  if (residual) *residual = (realified_ * c - target).norm();
  return c;
}

NumericLieAlgebra build_numeric_algebra(std::string_view name) {
  NumericLieAlgebra alg;
  alg.name_ = std::string(name);
  const MatrixXcd ih = mat2(I, 0.0, 0.0, -I);
  const MatrixXcd e_minus_f = mat2(0.0, 1.0, -1.0, 0.0);
  const MatrixXcd i_e_plus_f = mat2(0.0, I, I, 0.0);
  const MatrixXcd h = mat2(1.0, 0.0, 0.0, -1.0);
  const MatrixXcd e_plus_f = mat2(0.0, 1.0, 1.0, 0.0);
  const MatrixXcd i_e_minus_f = mat2(0.0, I, -I, 0.0);

  if (name == "su2") {
    alg.basis_ = {ih, e_minus_f, i_e_plus_f};
    alg.labels_ = {"i*h", "e-f", "i*(e+f)"};
    alg.rho_c_ = 1.0;
  } else if (name == "sl2r") {
    alg.basis_ = {e_minus_f, h, e_plus_f};
    alg.labels_ = {"e-f", "h", "e+f"};
    alg.rho_c_ = 0.0;
  } else if (name == "sl2c_real") {
    alg.basis_ = {ih, e_minus_f, i_e_plus_f, h, i_e_minus_f, e_plus_f};
    alg.labels_ = {"i*h", "e-f", "i*(e+f)", "h", "i*(e-f)", "e+f"};
    alg.rho_c_ = 1.0;
  } else {
    throw Error(ErrorCode::UnsupportedAlgebra, "unsupported algebra '" + std::string(name) + "'", "/algebra");
  }
  alg.torus_index_ = 0;
  alg.rank_k_ = 1;

  const int n = static_cast<int>(alg.basis_.size());
  alg.realified_.resize(8, n);
  for (int a = 0; a < n; ++a) alg.realified_.col(a) = realify(alg.basis_[a]);
  alg.realified_pinv_ = alg.realified_.completeOrthogonalDecomposition().pseudoInverse();

  alg.ad_basis_.assign(n, MatrixXd::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const MatrixXcd br = alg.basis_[a] * alg.basis_[b] - alg.basis_[b] * alg.basis_[a];
      double res = 0.0;
      alg.ad_basis_[a].col(b) = alg.coordinates(br, &res);
      alg.closure_residual_ = std::max(alg.closure_residual_, res);
    }

  alg.killing_.resize(n, n);
  alg.gram_.resize(n, n);
  MatrixXd theta(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      alg.killing_(a, b) = (alg.ad_basis_[a] * alg.ad_basis_[b]).trace();
      alg.gram_(a, b) = (alg.basis_[a].adjoint() * alg.basis_[b]).trace().real();
    }
    theta.col(a) = alg.coordinates(-alg.basis_[a].adjoint());
  }
  const MatrixXd id = MatrixXd::Identity(n, n);
  alg.proj_k_ = 0.5 * (id + theta);
  alg.proj_p_ = 0.5 * (id - theta);
  alg.k_basis_ = range_basis(alg.proj_k_);
  alg.p_basis_ = range_basis(alg.proj_p_);
  return alg;
}

double StructureResiduals::max() const {
  return std::max({antisymmetry, jacobi, killing_invariance, projector_idempotent, projector_complementary,
                   projector_orthogonal, grading_kk, grading_kp, grading_pp, closure});
}

StructureResiduals structure_residuals(const NumericLieAlgebra& alg) {
  StructureResiduals r;
  const int n = alg.dim();
  const auto e = [n](int a) {
    VectorXd v = VectorXd::Zero(n);
    v(a) = 1.0;
    return v;
  };
  const auto& b = alg.killing_form();
  const auto& pk = alg.projector_k();
  const auto& pp = alg.projector_p();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const VectorXd xy = alg.bracket(e(x), e(y));
      r.antisymmetry = std::max(r.antisymmetry, (xy + alg.bracket(e(y), e(x))).cwiseAbs().maxCoeff());
      const VectorXd kk = alg.bracket(pk * e(x), pk * e(y));
      const VectorXd kp = alg.bracket(pk * e(x), pp * e(y));
      const VectorXd ppb = alg.bracket(pp * e(x), pp * e(y));
      r.grading_kk = std::max(r.grading_kk, (pp * kk).cwiseAbs().maxCoeff());
      r.grading_kp = std::max(r.grading_kp, (pk * kp).cwiseAbs().maxCoeff());
      r.grading_pp = std::max(r.grading_pp, (pp * ppb).cwiseAbs().maxCoeff());
      for (int z = 0; z < n; ++z) {
        const VectorXd jac = alg.bracket(e(x), alg.bracket(e(y), e(z))) +
                             alg.bracket(e(y), alg.bracket(e(z), e(x))) +
                             alg.bracket(e(z), xy);
        r.jacobi = std::max(r.jacobi, jac.cwiseAbs().maxCoeff());
        const double inv = xy.dot(b * e(z)) + e(y).dot(b * alg.bracket(e(x), e(z)));
        r.killing_invariance = std::max(r.killing_invariance, std::abs(inv));
      }
    }
  const MatrixXd id = MatrixXd::Identity(n, n);
  r.projector_idempotent = std::max((pk * pk - pk).cwiseAbs().maxCoeff(), (pp * pp - pp).cwiseAbs().maxCoeff());
  r.projector_complementary = (pk + pp - id).cwiseAbs().maxCoeff();
  r.projector_orthogonal = (pk.transpose() * alg.inner_product() * pp).cwiseAbs().maxCoeff();
  r.closure = alg.closure_residual();
  return r;
}

// ---------------------------------------------------------------------------
// Forms and actions

CoadjointPoint coadjoint_point(const NumericLieAlgebra& alg, double value) {
  CoadjointPoint p{VectorXd::Zero(alg.dim())};
  p.xi(alg.torus_index()) = value;
  return p;
}

double kks_form(const NumericLieAlgebra& alg, const CoadjointPoint& xi, const VectorXd& x, const VectorXd& y) {
  check_length(alg, xi.xi, "xi");
  check_length(alg, x, "X");
  check_length(alg, y, "Y");
  return xi.xi.dot(alg.bracket(x, y));
}

double induced_two_form(const NumericLieAlgebra& alg, const FibreSample& n, const VectorXd& x, const VectorXd& y) {
  check_length(alg, x, "X");
  check_length(alg, y, "Y");
  check_in_p(alg, x, "X");
  check_in_p(alg, y, "Y");
  return n.nu_vw - kks_form(alg, n.phi_n, x, y);
}

VectorXd coadjoint_tangent(const NumericLieAlgebra& alg, const VectorXd& x, const CoadjointPoint& eta) {
  check_length(alg, x, "X");
  check_length(alg, eta.xi, "eta");
  return -alg.ad(x).transpose() * eta.xi;
}

double orbit_kks_form(const NumericLieAlgebra& alg, OrbitGroup group, const CoadjointPoint& eta, const VectorXd& v,
                      const VectorXd& w) {
  check_length(alg, eta.xi, "eta");
  check_length(alg, v, "v");
  check_length(alg, w, "w");
  const MatrixXd& sub = group == OrbitGroup::K ? alg.k_basis() : MatrixXd::Identity(alg.dim(), alg.dim());
  // Column j: ad^*(s_j) eta for the j-th spanning vector of the subalgebra.
  MatrixXd tangent(alg.dim(), sub.cols());
  for (Eigen::Index j = 0; j < sub.cols(); ++j) tangent.col(j) = coadjoint_tangent(alg, sub.col(j), eta);
  const auto solver = tangent.completeOrthogonalDecomposition();
  const auto preimage = [&](const VectorXd& t, std::string_view what) {
    const VectorXd c = solver.solve(t);
    const double res = (tangent * c - t).norm();
    if (res > tolerance::kRank * std::max(1.0, t.norm()))
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not tangent to the orbit (residual " +
                                                  std::to_string(res) + ")");
    return VectorXd(sub * c);
  };
  return -kks_form(alg, eta, preimage(v, "v"), preimage(w, "w"));
}

MatrixXcd group_exp(const NumericLieAlgebra& alg, const VectorXd& x) {
  check_length(alg, x, "X");
  return alg.to_matrix(x).exp();
}

MatrixXd adjoint_matrix(const NumericLieAlgebra& alg, const MatrixXcd& g) {
  if (g.rows() != 2 || g.cols() != 2)
    throw Error(ErrorCode::DimensionMismatch, "group element must be a 2x2 matrix");
  if (std::abs(g.determinant()) < 1e-12) throw Error(ErrorCode::SingularElement, "group element is singular");
  const MatrixXcd ginv = g.inverse();
  MatrixXd out(alg.dim(), alg.dim());
  for (int b = 0; b < alg.dim(); ++b) {
    double res = 0.0;
    out.col(b) = alg.coordinates(g * alg.basis_matrices()[b] * ginv, &res);
    if (res > 1e-8 * std::max(1.0, out.col(b).norm()))
      throw Error(ErrorCode::InvalidArgument, "conjugation by the element leaves " + alg.name());
  }
  return out;
}

CoadjointPoint induced_momentum(const NumericLieAlgebra& alg, const MatrixXcd& g, const CoadjointPoint& phi_n) {
  check_length(alg, phi_n.xi, "phi_n");
  if (g.rows() == 2 && g.cols() == 2 && std::abs(g.determinant()) < 1e-12)
    throw Error(ErrorCode::SingularElement, "group element is singular");
  const MatrixXd ad_inv = adjoint_matrix(alg, g.inverse());
  return CoadjointPoint{ad_inv.transpose() * phi_n.xi};
}

// ---------------------------------------------------------------------------
// Sampled identities

PullbackReport verify_pullback_identity(const NumericLieAlgebra& alg, double xi_value, int samples,
                                        std::uint64_t seed) {
  if (alg.is_compact())
    throw Error(ErrorCode::UnsupportedAlgebra, alg.name() + " is compact; the pullback identity needs p != 0",
                "/algebra");
  if (samples < 0) throw Error(ErrorCode::InvalidArgument, "samples must be nonnegative", "/samples");
  if (std::abs(xi_value) < tolerance::kRank) throw Error(ErrorCode::NotRegular, "xi = 0 is not regular in k*");

  PullbackReport report{alg.name(), seed, samples, 0.0};
  const CoadjointPoint xi = coadjoint_point(alg, xi_value);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const auto random_in = [&](const MatrixXd& basis) {
    VectorXd c(basis.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = unif(rng);
    return VectorXd(basis * c);
  };

  for (int s = 0; s < samples; ++s) {
    const MatrixXcd k = group_exp(alg, 3.0 * random_in(alg.k_basis()));
    const CoadjointPoint eta = induced_momentum(alg, k, xi);
    const VectorXd x = random_in(alg.k_basis());
    const VectorXd x2 = random_in(alg.k_basis());
    const VectorXd y = random_in(alg.p_basis());
    const VectorXd y2 = random_in(alg.p_basis());

    const double nu = orbit_kks_form(alg, OrbitGroup::K, eta, coadjoint_tangent(alg, x, eta),
                                     coadjoint_tangent(alg, x2, eta));
    const double omega = induced_two_form(alg, FibreSample{nu, eta}, y, y2);
    const double pulled = orbit_kks_form(alg, OrbitGroup::G, eta, coadjoint_tangent(alg, x + y, eta),
                                         coadjoint_tangent(alg, x2 + y2, eta));
    report.max_abs_error = std::max(report.max_abs_error, std::abs(omega - pulled));
  }
  return report;
}

DegeneracyReport degeneracy_rank(const NumericLieAlgebra& alg, const CoadjointPoint& xi) {
  check_length(alg, xi.xi, "xi");
  if (alg.dim_p() > 0 && (alg.p_basis().transpose() * xi.xi).norm() > tolerance::kMembership)
    throw Error(ErrorCode::InvalidArgument, "xi does not annihilate p, so it is not an element of k*");

  const int n = alg.dim();
  MatrixXd omega(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) omega(a, b) = xi.xi.dot(alg.structure()[a].col(b));

  DegeneracyReport r;
  const MatrixXd& kb = alg.k_basis();
  // k_xi: X in k with <xi, [X, Z]> = 0 for every Z in g.
  const MatrixXd k_null = null_space(omega.transpose() * kb, tolerance::kRank);
  const MatrixXd k_xi = kb * k_null;
  r.dim_k_xi = static_cast<int>(k_xi.cols());
  if (r.dim_k_xi != alg.rank_k())
    throw Error(ErrorCode::NotRegular, "xi is not regular: dim k_xi = " + std::to_string(r.dim_k_xi));
  r.dim_g_xi = static_cast<int>(null_space(omega, tolerance::kRank).cols());
  r.fibre_dim = r.dim_g_xi - r.dim_k_xi;

  const MatrixXd& gram = alg.inner_product();
  // Complement of k_xi in g and in k, orthogonal for the invariant inner product.
  const MatrixXd g_complement = null_space(k_xi.transpose() * gram, tolerance::kRank);
  r.kernel_dim = count_small_singular_values(g_complement.transpose() * omega * g_complement, tolerance::kRank);
  const MatrixXd k_complement = kb * null_space(k_xi.transpose() * gram * kb, tolerance::kRank);
  r.orbit_kernel_dim = count_small_singular_values(k_complement.transpose() * omega * k_complement, tolerance::kRank);
  return r;
}

}  // namespace orbitq
