#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace orbitq {

/// Real Lie algebra g = k + p realised by explicit 2x2 complex matrices.
/// Vectors are coefficient vectors in the matrix basis; covectors are
/// coefficient vectors in the dual basis, paired by the Euclidean dot product.
class NumericLieAlgebra {
 public:
  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  int dim_k() const noexcept { return static_cast<int>(k_basis_.cols()); }
  int dim_p() const noexcept { return static_cast<int>(p_basis_.cols()); }
  int rank_k() const noexcept { return rank_k_; }
  bool is_compact() const noexcept { return dim_p() == 0; }

  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  const std::vector<Eigen::MatrixXcd>& basis_matrices() const noexcept { return basis_; }

  /// structure()[a](c, b) = c^c_{ab}, i.e. the matrix of ad(e_a).
  const std::vector<Eigen::MatrixXd>& structure() const noexcept { return ad_basis_; }
  const Eigen::MatrixXd& killing_form() const noexcept { return killing_; }
  /// Gram matrix of Re tr(X^* Y): Ad(K)-invariant, k orthogonal to p.
  const Eigen::MatrixXd& inner_product() const noexcept { return gram_; }
  const Eigen::MatrixXd& projector_k() const noexcept { return proj_k_; }
  const Eigen::MatrixXd& projector_p() const noexcept { return proj_p_; }
  /// Columns span k (resp. p).
  const Eigen::MatrixXd& k_basis() const noexcept { return k_basis_; }
  const Eigen::MatrixXd& p_basis() const noexcept { return p_basis_; }

  /// Basis index of the generator T of a maximal torus of K; a weight n
  /// corresponds to the covector with value n on T and zero elsewhere.
  int torus_index() const noexcept { return torus_index_; }
  /// rho_c of K in the same convention (1 for SU(2), 0 for SO(2)).
  double rho_c() const noexcept { return rho_c_; }

  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

  Eigen::MatrixXcd to_matrix(const Eigen::VectorXd& x) const;
  /// Least-squares coordinates of a matrix; `residual` receives the
  /// distance from the real span of the basis.
  Eigen::VectorXd coordinates(const Eigen::MatrixXcd& m, double* residual = nullptr) const;

  /// Largest deviation met while expanding brackets in the basis.
  double closure_residual() const noexcept { return closure_residual_; }

 private:
  friend NumericLieAlgebra build_numeric_algebra(std::string_view name);

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Eigen::MatrixXcd> basis_;
  Eigen::MatrixXd realified_;
  Eigen::MatrixXd realified_pinv_;
  std::vector<Eigen::MatrixXd> ad_basis_;
  Eigen::MatrixXd killing_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd proj_k_;
  Eigen::MatrixXd proj_p_;
  Eigen::MatrixXd k_basis_;
  Eigen::MatrixXd p_basis_;
  int torus_index_ = 0;
  int rank_k_ = 1;
  double rho_c_ = 0.0;
  double closure_residual_ = 0.0;
};

/// "su2", "sl2r" or "sl2c_real" (sl(2,C) as a real Lie algebra).
NumericLieAlgebra build_numeric_algebra(std::string_view name);

struct StructureResiduals {
  double antisymmetry = 0;
  double jacobi = 0;
  double killing_invariance = 0;
  double projector_idempotent = 0;
  double projector_complementary = 0;
  double projector_orthogonal = 0;
  double grading_kk = 0;  ///< [k,k] in k
  double grading_kp = 0;  ///< [k,p] in p
  double grading_pp = 0;  ///< [p,p] in k
  double closure = 0;

  double max() const;
};

StructureResiduals structure_residuals(const NumericLieAlgebra& alg);

/// Covector in g^*. When it represents an element of k^* its p-components vanish.
struct CoadjointPoint {
  Eigen::VectorXd xi;
};

/// The covector xi with xi(T) = value on the torus generator, zero on the
/// rest of the basis. With value = lambda + rho_c this is (lambda+rho_c)/i
/// under the real pairing.
CoadjointPoint coadjoint_point(const NumericLieAlgebra& alg, double value);

/// <xi, [X, Y]>.
double kks_form(const NumericLieAlgebra& alg, const CoadjointPoint& xi, const Eigen::VectorXd& x,
                const Eigen::VectorXd& y);

/// Data of N at a point n: the value nu_n(v, w) and Phi_N(n).
struct FibreSample {
  double nu_vw = 0.0;
  CoadjointPoint phi_n;
};

/// omega_{[e,n]}(X + v, Y + w) = nu_n(v, w) - <Phi_N(n), [X, Y]> for X, Y in p.
double induced_two_form(const NumericLieAlgebra& alg, const FibreSample& n, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y);

/// ad^*(X) eta, the tangent to the coadjoint orbit through eta.
Eigen::VectorXd coadjoint_tangent(const NumericLieAlgebra& alg, const Eigen::VectorXd& x, const CoadjointPoint& eta);

enum class OrbitGroup { K, G };

/// Kostant-Kirillov form of the K- or G-orbit through eta evaluated on two
/// orbit tangent vectors, recovering Lie algebra preimages by least squares:
/// omega_eta(ad^*(X) eta, ad^*(Y) eta) = -<eta, [X, Y]>. This is the sign for
/// which the inclusion is the momentum map in the convention of
/// induced_two_form.
/// Throws InvalidArgument if a vector is not tangent to the orbit.
double orbit_kks_form(const NumericLieAlgebra& alg, OrbitGroup group, const CoadjointPoint& eta,
                      const Eigen::VectorXd& v, const Eigen::VectorXd& w);

/// exp of the matrix realisation of x.
Eigen::MatrixXcd group_exp(const NumericLieAlgebra& alg, const Eigen::VectorXd& x);

/// Matrix of Ad(g) on coefficient vectors. Throws SingularElement for a
/// non-invertible g and InvalidArgument if conjugation leaves the algebra.
Eigen::MatrixXd adjoint_matrix(const NumericLieAlgebra& alg, const Eigen::MatrixXcd& g);

/// Phi_M([g, n]) = Ad^*(g) Phi_N(n).
CoadjointPoint induced_momentum(const NumericLieAlgebra& alg, const Eigen::MatrixXcd& g, const CoadjointPoint& phi_n);

struct PullbackReport {
  std::string algebra;
  std::uint64_t seed = 0;
  int samples = 0;
  double max_abs_error = 0.0;
};

/// Compares the induced two-form on G x_K (K.xi), with nu the orbit form on
/// K.xi, against the orbit form of G.xi pulled back along [e, k xi] -> k xi,
/// at random points and random tangent pairs.
PullbackReport verify_pullback_identity(const NumericLieAlgebra& alg, double xi_value, int samples,
                                        std::uint64_t seed);

struct DegeneracyReport {
  int kernel_dim = 0;        ///< null space of p^*omega on g / k_xi
  int fibre_dim = 0;         ///< dim g_xi - dim k_xi
  int orbit_kernel_dim = 0;  ///< null space of the KKS form on k / k_xi
  int dim_g_xi = 0;
  int dim_k_xi = 0;
};

/// Throws NotRegular unless xi is a regular element of k^*.
DegeneracyReport degeneracy_rank(const NumericLieAlgebra& alg, const CoadjointPoint& xi);

namespace tolerance {
inline constexpr double kStructure = 1e-12;
inline constexpr double kSampled = 1e-9;
inline constexpr double kRank = 1e-8;
inline constexpr double kMembership = 1e-10;
}  // namespace tolerance

}  // namespace orbitq
