#include "orbitq/rational.hpp"

#include <limits>
#include <stdexcept>

namespace orbitq {

namespace {

std::int64_t narrow(detail::int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("Rational: int64 overflow");
  return static_cast<std::int64_t>(v);
}

detail::int128 gcd128(detail::int128 a, detail::int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    detail::int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(detail::int128 n, detail::int128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const detail::int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalise(); }

void Rational::normalise() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  return *this = make(static_cast<detail::int128>(num_) * o.den_ + static_cast<detail::int128>(o.num_) * den_,
                      static_cast<detail::int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = make(static_cast<detail::int128>(num_) * o.den_ - static_cast<detail::int128>(o.num_) * den_,
                      static_cast<detail::int128>(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = make(static_cast<detail::int128>(num_) * o.num_, static_cast<detail::int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this = make(static_cast<detail::int128>(num_) * o.den_, static_cast<detail::int128>(den_) * o.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace orbitq
