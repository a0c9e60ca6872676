#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitq/quantize.hpp"
#include "orbitq/repring.hpp"
#include "orbitq/rootdata.hpp"

namespace orbitq {

enum class RealFormKind { Complex, EqualRankDiscreteSeries, Generic };

std::string_view to_string(RealFormKind kind) noexcept;
/// Accepts "complex", "discrete", "equal-rank", "generic" (case-insensitive).
RealFormKind parse_real_form_kind(std::string_view text);

/// A semisimple group G described through its maximal compact subgroup K.
class GroupDescriptor {
 public:
  /// Complex G with g = k (x) C. d defaults to dim K; g_rho defaults to rho_c.
  static GroupDescriptor complex(RootDatum k_datum, std::optional<int> d = {}, std::optional<Weight> g_rho = {});

  /// Equal-rank G with discrete series. `noncompact_coroots` are integer
  /// functionals (one per positive noncompact root, up to positive scaling)
  /// whose vanishing on a parameter puts it on a noncompact wall. When empty,
  /// each torus coordinate of K is used.
  static GroupDescriptor discrete_series(RootDatum k_datum, int d, std::vector<Weight> noncompact_coroots = {});

  static GroupDescriptor generic(RootDatum k_datum, int d);

  /// "SL2C", "SL3C", "SL2R", "SU21".
  static GroupDescriptor preset(std::string_view name);

  const RootDatum& k_datum() const noexcept { return k_datum_; }
  RealFormKind kind() const noexcept { return kind_; }
  int d() const noexcept { return d_; }
  int degree() const noexcept { return d_ % 2; }
  /// Only set for Complex descriptors.
  const std::optional<Weight>& g_rho() const noexcept { return g_rho_; }
  const std::vector<Weight>& noncompact_coroots() const noexcept { return noncompact_coroots_; }
  const std::string& name() const noexcept { return name_; }

 private:
  GroupDescriptor(RootDatum rd, RealFormKind kind, int d) : k_datum_(std::move(rd)), kind_(kind), d_(d) {}

  RootDatum k_datum_;
  RealFormKind kind_;
  int d_;
  std::optional<Weight> g_rho_;
  std::vector<Weight> noncompact_coroots_;
  std::string name_;
};

/// Element of K_d(C*_r(G)) in the basis c(lambda) of Dirac-induced classes.
class KTheoryClass {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  explicit KTheoryClass(int degree) : degree_(degree % 2) {}
  KTheoryClass(int degree, Terms terms);

  /// The generator c(lambda) in the given degree.
  static KTheoryClass generator(int degree, const Weight& lambda);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  std::int64_t coeff(const Weight& w) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Weight& w, std::int64_t c);

  /// Throws ParityMismatch when degrees differ.
  KTheoryClass& operator+=(const KTheoryClass& o);
  KTheoryClass& operator-=(const KTheoryClass& o);
  KTheoryClass& operator*=(std::int64_t s);
  friend KTheoryClass operator+(KTheoryClass a, const KTheoryClass& b) { return a += b; }
  friend KTheoryClass operator-(KTheoryClass a, const KTheoryClass& b) { return a -= b; }
  friend KTheoryClass operator*(std::int64_t s, KTheoryClass a) { return a *= s; }

  friend bool operator==(const KTheoryClass&, const KTheoryClass&) = default;

 private:
  int degree_;
  Terms terms_;
};

struct SeriesLabel {
  enum class Series { Principal, Discrete };
  Series series;
  Weight parameter;  ///< lambda + rho (principal) or the Harish-Chandra parameter (discrete)
  int sign = 1;

  friend bool operator==(const SeriesLabel&, const SeriesLabel&) = default;
};

/// [V_lambda] -> c(lambda), extended linearly.
KTheoryClass dirac_induct(const GroupDescriptor& g, const RepRingElement& x);

/// R_G^lambda: the coefficient of c(lambda).
std::int64_t reduce_rg(const GroupDescriptor& g, const KTheoryClass& y, const Weight& lambda);

/// Q_G(G x_K N) = sum_lambda Q(N_{lambda+rho_c}) c(lambda).
KTheoryClass quantize_induced(const GroupDescriptor& g, const OrbitProductManifold& n);

/// Q_G(G/K_xi, p^* omega) with xi = (lambda+rho_c)/i, via the single-orbit
/// induced manifold.
KTheoryClass orbit_method_class(const GroupDescriptor& g, const Weight& lambda);

/// c(lambda) = [pi^p_{lambda+rho}] for complex G.
SeriesLabel principal_series_label(const GroupDescriptor& g, const Weight& lambda);

struct DiscreteSeriesClass {
  SeriesLabel label;
  KTheoryClass cls;  ///< [pi^d_mu] = (-1)^{d/2} c(mu - rho_c)
};

DiscreteSeriesClass discrete_series_label(const GroupDescriptor& g, const Weight& mu);

/// Multiplicity of [pi^d_mu] in y: (-1)^{d/2} R_G^{mu-rho_c}(y).
std::int64_t discrete_series_multiplicity(const GroupDescriptor& g, const KTheoryClass& y, const Weight& mu);

}  // namespace orbitq
