#include "orbitq/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitq {

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("Weight: rank mismatch in +");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("Weight: rank mismatch in -");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(value_type s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

}  // namespace orbitq
