#include <doctest.h>

#include <random>

#include "orbitq/error.hpp"
#include "orbitq/geometry.hpp"

using namespace orbitq;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

namespace {

struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> unif{-1.0, 1.0};

  VectorXd in(const Eigen::MatrixXd& basis) {
    VectorXd c(basis.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = unif(rng);
    return basis * c;
  }
};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an orbitq::Error");
  return ErrorCode::InvalidArgument;
}

const char* const kAll[] = {"su2", "sl2r", "sl2c_real"};
const char* const kNoncompact[] = {"sl2r", "sl2c_real"};

}  // namespace

TEST_CASE("build_numeric_algebra dimensions") {
  const auto su2 = build_numeric_algebra("su2");
  CHECK(su2.dim() == 3);
  CHECK(su2.dim_p() == 0);
  CHECK(su2.is_compact());
  const auto sl2r = build_numeric_algebra("sl2r");
  CHECK(sl2r.dim() == 3);
  CHECK(sl2r.dim_k() == 1);
  CHECK(sl2r.dim_p() == 2);
  const auto sl2c = build_numeric_algebra("sl2c_real");
  CHECK(sl2c.dim() == 6);
  CHECK(sl2c.dim_k() == 3);
  CHECK(sl2c.dim_p() == 3);
  CHECK(sl2c.basis_labels().size() == 6);
  CHECK(code_of([] { (void)build_numeric_algebra("so3"); }) == ErrorCode::UnsupportedAlgebra);
}

TEST_CASE("structure residuals are at rounding level") {
  for (const char* name : kAll) {
    CAPTURE(name);
    const auto r = structure_residuals(build_numeric_algebra(name));
    CHECK(r.antisymmetry < tolerance::kStructure);
    CHECK(r.jacobi < tolerance::kStructure);
    CHECK(r.killing_invariance < tolerance::kStructure);
    CHECK(r.projector_idempotent < tolerance::kStructure);
    CHECK(r.projector_complementary < tolerance::kStructure);
    CHECK(r.projector_orthogonal < tolerance::kStructure);
    CHECK(r.grading_kk < tolerance::kStructure);
    CHECK(r.grading_kp < tolerance::kStructure);
    CHECK(r.grading_pp < tolerance::kStructure);
    CHECK(r.closure < tolerance::kStructure);
  }
}

TEST_CASE("Killing form signature matches the real form") {
  for (const char* name : kAll) {
    const auto alg = build_numeric_algebra(name);
    const Eigen::MatrixXd kk = alg.k_basis().transpose() * alg.killing_form() * alg.k_basis();
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(kk).eigenvalues().maxCoeff() < 0);
    if (alg.dim_p() > 0) {
      const Eigen::MatrixXd pp = alg.p_basis().transpose() * alg.killing_form() * alg.p_basis();
      CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(pp).eigenvalues().minCoeff() > 0);
    }
  }
}

TEST_CASE("kks_form") {
  const auto su2 = build_numeric_algebra("su2");
  const auto xi = coadjoint_point(su2, 2.0);
  Sampler s(3);
  const VectorXd x = s.in(Eigen::MatrixXd::Identity(3, 3));
  CHECK(kks_form(su2, xi, x, x) == doctest::Approx(0.0));
  CHECK(kks_form(su2, coadjoint_point(su2, 0.0), x, s.in(Eigen::MatrixXd::Identity(3, 3))) == 0.0);

  // xi dual to the torus generator; e_1, e_2 span the rest of su(2).
  const auto h = coadjoint_point(su2, 1.0);
  const VectorXd e1 = VectorXd::Unit(3, 1);
  const VectorXd e2 = VectorXd::Unit(3, 2);
  CHECK(kks_form(su2, h, e1, e2) == doctest::Approx(su2.structure()[1](su2.torus_index(), 2)));
  CHECK(std::abs(kks_form(su2, h, e1, e2)) > 0.5);
  CHECK(code_of([&] { (void)kks_form(su2, h, VectorXd::Zero(2), e2); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("induced_two_form") {
  const auto alg = build_numeric_algebra("sl2c_real");
  const auto xi = coadjoint_point(alg, 2.0);
  Sampler s(5);
  const VectorXd y = s.in(alg.p_basis());
  const VectorXd y2 = s.in(alg.p_basis());
  CHECK(induced_two_form(alg, {0.75, xi}, y, 2.0 * y) == doctest::Approx(0.75));
  CHECK(induced_two_form(alg, {0.75, xi}, y, y) == doctest::Approx(0.75));
  CHECK(induced_two_form(alg, {0.0, xi}, y, y2) == doctest::Approx(-kks_form(alg, xi, y, y2)));
  CHECK(code_of([&] { (void)induced_two_form(alg, {0.0, xi}, s.in(alg.k_basis()), y); }) == ErrorCode::NotInP);

  SUBCASE("antisymmetric in the full tangent pair") {
    for (const char* name : kNoncompact) {
      const auto a = build_numeric_algebra(name);
      const auto eta = coadjoint_point(a, 1.5);
      for (int t = 0; t < 100; ++t) {
        const VectorXd x = s.in(a.k_basis());
        const VectorXd x2 = s.in(a.k_basis());
        const VectorXd v = coadjoint_tangent(a, x, eta);
        const VectorXd w = coadjoint_tangent(a, x2, eta);
        const VectorXd p1 = s.in(a.p_basis());
        const VectorXd p2 = s.in(a.p_basis());
        const double fwd = induced_two_form(a, {orbit_kks_form(a, OrbitGroup::K, eta, v, w), eta}, p1, p2);
        const double bwd = induced_two_form(a, {orbit_kks_form(a, OrbitGroup::K, eta, w, v), eta}, p2, p1);
        CHECK(std::abs(fwd + bwd) < tolerance::kStructure);
      }
    }
  }
}

TEST_CASE("induced_momentum") {
  const auto alg = build_numeric_algebra("sl2r");
  const auto xi = coadjoint_point(alg, 1.0);
  const MatrixXcd id = MatrixXcd::Identity(2, 2);
  CHECK((induced_momentum(alg, id, xi).xi - xi.xi).norm() < tolerance::kMembership);

  VectorXd t = VectorXd::Zero(alg.dim());
  t(alg.torus_index()) = 0.7;
  CHECK((induced_momentum(alg, group_exp(alg, t), xi).xi - xi.xi).norm() < tolerance::kMembership);

  Sampler s(9);
  const Eigen::MatrixXd all = Eigen::MatrixXd::Identity(alg.dim(), alg.dim());
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixXcd g = group_exp(alg, s.in(all));
    const VectorXd moved = induced_momentum(alg, g, xi).xi;
    const MatrixXcd ginv = g.inverse();
    for (int b = 0; b < alg.dim(); ++b) {
      // <Ad*(g) xi, X> = <xi, Ad(g^-1) X> with Ad(g^-1) X = g^-1 X g.
      const VectorXd conj = alg.coordinates(ginv * alg.basis_matrices()[b] * g);
      CHECK(std::abs(moved(b) - xi.xi.dot(conj)) < tolerance::kMembership);
    }
  }

  MatrixXcd singular = MatrixXcd::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK(code_of([&] { (void)induced_momentum(alg, singular, xi); }) == ErrorCode::SingularElement);
  CHECK(code_of([&] { (void)adjoint_matrix(alg, singular); }) == ErrorCode::SingularElement);
}

TEST_CASE("momentum map is equivariant") {
  for (const char* name : kNoncompact) {
    const auto alg = build_numeric_algebra(name);
    const auto xi = coadjoint_point(alg, 2.0);
    Sampler s(13);
    const Eigen::MatrixXd all = Eigen::MatrixXd::Identity(alg.dim(), alg.dim());
    for (int t = 0; t < 50; ++t) {
      const MatrixXcd g1 = group_exp(alg, s.in(all));
      const MatrixXcd g2 = group_exp(alg, s.in(all));
      const VectorXd lhs = induced_momentum(alg, g1 * g2, xi).xi;
      const VectorXd rhs = induced_momentum(alg, g1, induced_momentum(alg, g2, xi)).xi;
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < tolerance::kMembership * std::max(1.0, lhs.norm()));
    }
  }
}

TEST_CASE("orbit form is G-invariant at sampled points") {
  for (const char* name : kNoncompact) {
    CAPTURE(name);
    const auto alg = build_numeric_algebra(name);
    const auto xi = coadjoint_point(alg, 1.0 + alg.rho_c());
    Sampler s(17);
    const Eigen::MatrixXd all = Eigen::MatrixXd::Identity(alg.dim(), alg.dim());
    const CoadjointPoint eta = induced_momentum(alg, group_exp(alg, s.in(alg.k_basis())), xi);
    const VectorXd x = s.in(all);
    const VectorXd x2 = s.in(all);
    const double base = orbit_kks_form(alg, OrbitGroup::G, eta, coadjoint_tangent(alg, x, eta),
                                       coadjoint_tangent(alg, x2, eta));
    for (int t = 0; t < 50; ++t) {
      const MatrixXcd g = group_exp(alg, 0.5 * s.in(all));
      const Eigen::MatrixXd ad = adjoint_matrix(alg, g);
      const CoadjointPoint moved = induced_momentum(alg, g, eta);
      // Ad*(g) maps ad*(X) eta to ad*(Ad(g) X) Ad*(g) eta.
      const double transported = orbit_kks_form(alg, OrbitGroup::G, moved, coadjoint_tangent(alg, ad * x, moved),
                                                coadjoint_tangent(alg, ad * x2, moved));
      CHECK(std::abs(transported - base) < tolerance::kSampled);
    }
  }
}

TEST_CASE("orbit_kks_form rejects non-tangent vectors") {
  const auto alg = build_numeric_algebra("sl2c_real");
  const auto xi = coadjoint_point(alg, 2.0);
  const VectorXd normal = xi.xi;  // the radial direction is not tangent to the K-orbit
  const VectorXd tangent = coadjoint_tangent(alg, alg.k_basis().col(1), xi);
  CHECK(code_of([&] { (void)orbit_kks_form(alg, OrbitGroup::K, xi, normal, tangent); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("verify_pullback_identity") {
  for (const char* name : kNoncompact) {
    CAPTURE(name);
    const auto alg = build_numeric_algebra(name);
    const double xi = 1.0 + alg.rho_c();
    CHECK(verify_pullback_identity(alg, xi, 0, 1).max_abs_error == 0.0);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto r = verify_pullback_identity(alg, xi, 1000, seed);
      CHECK(r.samples == 1000);
      CHECK(r.seed == seed);
      CHECK(r.max_abs_error < tolerance::kSampled);
    }
    const auto a = verify_pullback_identity(alg, xi, 200, 42);
    const auto b = verify_pullback_identity(alg, xi, 200, 42);
    CHECK(a.max_abs_error == b.max_abs_error);
  }
  const auto su2 = build_numeric_algebra("su2");
  CHECK(code_of([&] { (void)verify_pullback_identity(su2, 1.0, 10, 0); }) == ErrorCode::UnsupportedAlgebra);
  CHECK(code_of([] { (void)verify_pullback_identity(build_numeric_algebra("sl2r"), 0.0, 10, 0); }) ==
        ErrorCode::NotRegular);
}

TEST_CASE("degeneracy_rank") {
  const auto sl2c = build_numeric_algebra("sl2c_real");
  const auto r = degeneracy_rank(sl2c, coadjoint_point(sl2c, 2.0));
  CHECK(r.kernel_dim == 1);
  CHECK(r.fibre_dim == 1);
  CHECK(r.orbit_kernel_dim == 0);
  CHECK(r.dim_k_xi == 1);
  CHECK(r.dim_g_xi == 2);

  const auto sl2r = build_numeric_algebra("sl2r");
  const auto q = degeneracy_rank(sl2r, coadjoint_point(sl2r, 1.0));
  CHECK(q.kernel_dim == q.fibre_dim);
  CHECK(q.fibre_dim == q.dim_g_xi - q.dim_k_xi);

  const auto su2 = build_numeric_algebra("su2");
  const auto c = degeneracy_rank(su2, coadjoint_point(su2, 3.0));
  CHECK(c.kernel_dim == 0);
  CHECK(c.orbit_kernel_dim == 0);

  CHECK(code_of([&] { (void)degeneracy_rank(sl2c, coadjoint_point(sl2c, 0.0)); }) == ErrorCode::NotRegular);
  CoadjointPoint off{VectorXd::Zero(sl2c.dim())};
  off.xi(sl2c.dim() - 1) = 1.0;
  CHECK(code_of([&] { (void)degeneracy_rank(sl2c, off); }) == ErrorCode::InvalidArgument);
}
