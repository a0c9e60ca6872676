#include "orbitq/quantize.hpp"

#include <algorithm>

#include "orbitq/error.hpp"

namespace orbitq {

OrbitProductManifold::OrbitProductManifold(RootDatum rd, std::vector<Weight> factors)
    : rd_(std::move(rd)), factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::InvalidArgument, "orbit product needs at least one factor", "/factors");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto field = "/factors/" + std::to_string(i);
    try {
      require_dominant(rd_, factors_[i], "orbit factor");
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), field);
    }
  }
}

Weight OrbitProductManifold::orbit_point(std::size_t i) const { return factors_.at(i) + rd_.rho_c(); }

std::size_t OrbitProductManifold::orbit_dimension(std::size_t i) const {
  const Weight p = orbit_point(i);
  const auto& roots = rd_.positive_roots();
  const auto moving = std::count_if(roots.begin(), roots.end(),
                                    [&](const Root& a) { return rd_.inner_scaled(p, a.coords) != 0; });
  return 2 * static_cast<std::size_t>(moving);
}

std::size_t OrbitProductManifold::dimension() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) d += orbit_dimension(i);
  return d;
}

RepRingElement quantize_compact(const OrbitProductManifold& n) {
  const auto& rd = n.root_datum();
  RepRingElement q = RepRingElement::irreducible(rd, n.factors().front());
  for (std::size_t i = 1; i < n.factors().size(); ++i)
    q = tensor_product(rd, q, RepRingElement::irreducible(rd, n.factors()[i]));
  return q;
}

bool misses_open_chamber(const OrbitProductManifold& n) {
  const auto& rd = n.root_datum();
  for (const auto& a : rd.positive_roots()) {
    bool all_vanish = true;
    for (std::size_t i = 0; i < n.factors().size() && all_vanish; ++i)
      all_vanish = rd.inner_scaled(n.orbit_point(i), a.coords) == 0;
    if (all_vanish) return true;
  }
  return false;
}

Reduction reduce_quantization(const OrbitProductManifold& n, const Weight& lambda) {
  require_dominant(n.root_datum(), lambda, "lambda");
  return Reduction{multiplicity_rk(n.root_datum(), quantize_compact(n), lambda), misses_open_chamber(n)};
}

}  // namespace orbitq
