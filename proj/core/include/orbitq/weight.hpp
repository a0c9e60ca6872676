#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace orbitq {

/// Integral weight in the fundamental-weight basis (simple factors) and the
/// lattice-generator basis (torus factors). Ordered lexicographically.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<value_type> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<value_type> coords) : coords_(coords) {}

  std::size_t rank() const noexcept { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  std::span<const value_type> coords() const noexcept { return coords_; }
  const std::vector<value_type>& vec() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(value_type s);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= -1; }
  friend Weight operator*(value_type s, Weight a) { return a *= s; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<value_type> coords_;
};

}  // namespace orbitq
