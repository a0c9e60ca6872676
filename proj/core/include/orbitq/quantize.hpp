#pragma once

#include <cstdint>
#include <vector>

#include "orbitq/repring.hpp"
#include "orbitq/rootdata.hpp"

namespace orbitq {

/// Compact Hamiltonian K-manifold N = prod_i K.xi_i, xi_i = (lambda_i + rho_c)/i,
/// recorded by the dominant weights lambda_i.
class OrbitProductManifold {
 public:
  /// Throws InvalidArgument for an empty factor list, NotDominant /
  /// DimensionMismatch for a bad factor.
  OrbitProductManifold(RootDatum rd, std::vector<Weight> factors);

  const RootDatum& root_datum() const noexcept { return rd_; }
  const std::vector<Weight>& factors() const noexcept { return factors_; }

  /// lambda_i + rho_c: the orbit point i*xi_i in weight coordinates.
  Weight orbit_point(std::size_t i) const;
  /// 2 * #{alpha > 0 : <lambda_i + rho_c, alpha> != 0}.
  std::size_t orbit_dimension(std::size_t i) const;
  std::size_t dimension() const;

 private:
  RootDatum rd_;
  std::vector<Weight> factors_;
};

/// Q_K(N) = (x)_i [V_{lambda_i}] expanded into irreducibles.
RepRingElement quantize_compact(const OrbitProductManifold& n);

/// True when some positive root is orthogonal to every orbit point, i.e. the
/// momentum image misses the open positive chamber and the unshifted
/// multiplicity below comes with a caveat.
bool misses_open_chamber(const OrbitProductManifold& n);

struct Reduction {
  std::int64_t multiplicity = 0;
  bool chamber_warning = false;
};

/// Q(N_xi) at xi = (lambda + rho_c)/i, computed as R_K^lambda(Q_K(N)).
Reduction reduce_quantization(const OrbitProductManifold& n, const Weight& lambda);

}  // namespace orbitq
