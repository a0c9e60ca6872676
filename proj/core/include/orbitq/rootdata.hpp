#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orbitq/rational.hpp"
#include "orbitq/weight.hpp"

namespace orbitq {

enum class Series { A, B, C, D, G2, Torus };

struct CartanFactor {
  Series series;
  int rank;

  friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

/// A product of simple factors and torus factors, e.g. "A2", "A1xT1", "B2xG2".
class CartanKind {
 public:
  explicit CartanKind(std::vector<CartanFactor> factors);

  /// Parses strings like "A2", "A1xT1", "G2". Throws ParseError / UnsupportedKind.
  static CartanKind parse(std::string_view text);

  const std::vector<CartanFactor>& factors() const noexcept { return factors_; }
  int rank() const noexcept;
  std::string to_string() const;

  friend bool operator==(const CartanKind&, const CartanKind&) = default;

 private:
  std::vector<CartanFactor> factors_;
};

struct Root {
  Weight coords;        ///< fundamental-weight coordinates
  Weight simple_coeffs; ///< coefficients on simple roots (zero on torus slots)
  int height;
};

/// Root system, weight lattice and Weyl group data of a compact connected
/// reductive group. Immutable after construction.
///
/// Conventions: coordinate i of a weight is its pairing with the i-th simple
/// coroot on simple factors; row i of the Cartan matrix is the i-th simple
/// root in those coordinates. Torus slots carry no roots, their Cartan rows
/// are zero and the invariant form is the identity there.
class RootDatum {
 public:
  const CartanKind& kind() const noexcept { return kind_; }
  std::size_t rank() const noexcept { return rank_; }

  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  const std::vector<std::vector<std::int64_t>>& cartan_matrix() const noexcept { return cartan_; }
  const Weight& rho_c() const noexcept { return rho_; }
  std::uint64_t weyl_order() const noexcept { return weyl_order_; }
  const std::vector<std::vector<Rational>>& bilinear_form() const noexcept { return form_; }

  /// Indices of coordinates that belong to simple factors (the simple reflections).
  const std::vector<std::size_t>& simple_indices() const noexcept { return simple_indices_; }
  bool is_simple_index(std::size_t i) const noexcept { return is_simple_[i]; }

  /// Simple root alpha_i as a weight; i must be a simple index.
  Weight simple_root(std::size_t i) const;

  /// s_i(w) = w - w_i alpha_i.
  Weight reflect(std::size_t i, const Weight& w) const;

  Rational inner(const Weight& a, const Weight& b) const;
  /// inner() multiplied by form_scale(); exact integer.
  std::int64_t inner_scaled(const Weight& a, const Weight& b) const;
  std::int64_t form_scale() const noexcept { return form_scale_; }

  /// Throws DimensionMismatch if w does not have rank() coordinates.
  void check_rank(const Weight& w, std::string_view what = "weight") const;

  std::size_t dim_group() const noexcept { return rank_ + 2 * positive_roots_.size(); }

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.kind_ == b.kind_; }

 private:
  friend RootDatum build_root_datum(const CartanKind& kind);
  explicit RootDatum(CartanKind kind) : kind_(std::move(kind)) {}

  CartanKind kind_;
  std::size_t rank_ = 0;
  std::vector<Root> positive_roots_;
  std::vector<std::vector<std::int64_t>> cartan_;
  Weight rho_;
  std::uint64_t weyl_order_ = 1;
  std::vector<std::vector<Rational>> form_;
  std::vector<std::vector<std::int64_t>> form_scaled_;
  std::int64_t form_scale_ = 1;
  std::vector<std::size_t> simple_indices_;
  std::vector<bool> is_simple_;
};

RootDatum build_root_datum(const CartanKind& kind);
inline RootDatum build_root_datum(std::string_view kind) { return build_root_datum(CartanKind::parse(kind)); }

std::set<Weight> weyl_orbit(const RootDatum& rd, const Weight& w);

struct DominantProjection {
  Weight dominant;
  int det;  ///< (-1)^(number of simple reflections applied)
};

DominantProjection dominant_projection(const RootDatum& rd, const Weight& w);

bool is_dominant(const RootDatum& rd, const Weight& w);
bool is_regular(const RootDatum& rd, const Weight& w);

/// Throws NotDominant (after a rank check) unless w is dominant.
void require_dominant(const RootDatum& rd, const Weight& w, std::string_view what = "weight");

}  // namespace orbitq
