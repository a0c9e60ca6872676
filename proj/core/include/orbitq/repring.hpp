#pragma once

#include <cstdint>
#include <map>

#include "orbitq/rootdata.hpp"
#include "orbitq/weight.hpp"

namespace orbitq {

/// Element of the representation ring R(K): a finite Z-combination of
/// irreducibles [V_lambda], keyed by dominant highest weight. Zero
/// coefficients are never stored.
class RepRingElement {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  RepRingElement() = default;
  /// Validates every key against rd (rank and dominance).
  RepRingElement(const RootDatum& rd, Terms terms);

  static RepRingElement irreducible(const RootDatum& rd, const Weight& highest);

  const Terms& terms() const noexcept { return terms_; }
  std::int64_t coeff(const Weight& w) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c[V_w] with no validation; the caller guarantees w is dominant.
  void add(const Weight& w, std::int64_t c);

  RepRingElement& operator+=(const RepRingElement& o);
  RepRingElement& operator-=(const RepRingElement& o);
  RepRingElement& operator*=(std::int64_t s);
  friend RepRingElement operator+(RepRingElement a, const RepRingElement& b) { return a += b; }
  friend RepRingElement operator-(RepRingElement a, const RepRingElement& b) { return a -= b; }
  friend RepRingElement operator*(std::int64_t s, RepRingElement a) { return a *= s; }

  friend bool operator==(const RepRingElement&, const RepRingElement&) = default;

 private:
  Terms terms_;
};

/// Weight multiset of a finite-dimensional representation.
struct FormalCharacter {
  std::map<Weight, std::int64_t> mults;

  std::int64_t mult(const Weight& w) const;
  std::int64_t total_mass() const;
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
};

/// Multiplicities of the dominant weights of V_lambda (Freudenthal recursion).
std::map<Weight, std::int64_t> dominant_multiplicities(const RootDatum& rd, const Weight& lambda);

/// Full weight multiset of V_lambda: Freudenthal on dominant weights,
/// extended over Weyl orbits.
FormalCharacter irreducible_character(const RootDatum& rd, const Weight& lambda);

/// prod_{alpha>0} <lambda+rho, alpha> / <rho, alpha>, exact.
std::int64_t weyl_dimension(const RootDatum& rd, const Weight& lambda);

/// Dimension of a virtual representation.
std::int64_t dimension(const RootDatum& rd, const RepRingElement& x);

/// V_lambda (x) V_mu by Klimyk's formula: the character of the smaller factor
/// is shifted by the other highest weight plus rho and folded into the
/// dominant chamber with signs.
RepRingElement tensor_decompose(const RootDatum& rd, const Weight& lambda, const Weight& mu);

/// Bilinear extension of tensor_decompose.
RepRingElement tensor_product(const RootDatum& rd, const RepRingElement& x, const RepRingElement& y);

/// Pointwise product of characters (convolution of weight multisets).
FormalCharacter character_product(const FormalCharacter& a, const FormalCharacter& b);

/// Decomposes a Weyl-invariant character into irreducibles by repeatedly
/// removing the character of a highest weight. Throws InvalidArgument when the
/// input is not the character of a (virtual) representation.
RepRingElement decompose_character(const RootDatum& rd, const FormalCharacter& chi);

/// R_K^lambda: the coefficient of [V_lambda] in x.
std::int64_t multiplicity_rk(const RootDatum& rd, const RepRingElement& x, const Weight& lambda);

}  // namespace orbitq
