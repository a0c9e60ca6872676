#include "orbitq/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "orbitq/error.hpp"

namespace orbitq {

namespace {

constexpr int kMaxFactorRank = 8;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
    case Series::G2: return 'G';
    case Series::Torus: return 'T';
  }
  return '?';
}

void validate_factor(const CartanFactor& f) {
  const auto name = std::string(1, series_letter(f.series)) + std::to_string(f.rank);
  if (f.rank < 1) throw Error(ErrorCode::UnsupportedKind, "factor " + name + ": rank must be >= 1");
  int min_rank = 1;
  int max_rank = kMaxFactorRank;
  switch (f.series) {
    case Series::A: break;
    case Series::B:
    case Series::C: min_rank = 2; break;
    case Series::D: min_rank = 3; break;
    case Series::G2: min_rank = max_rank = 2; break;
    case Series::Torus: break;
  }
  if (f.rank < min_rank || f.rank > max_rank)
    throw Error(ErrorCode::UnsupportedKind, "factor " + name + " is outside the implemented table");
}

/// Row i = simple root alpha_i in fundamental-weight coordinates.
IntMatrix factor_cartan(const CartanFactor& f) {
  const int n = f.rank;
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  if (f.series == Series::Torus) return a;
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (f.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case Series::G2:
      a[0][1] = -1;  // alpha_1 short
      a[1][0] = -3;
      break;
    case Series::Torus: break;
  }
  return a;
}

/// (alpha_i, alpha_i)/2 with long roots normalised to squared length 2.
std::vector<Rational> factor_half_lengths(const CartanFactor& f) {
  const int n = f.rank;
  std::vector<Rational> d(n, Rational(1));
  switch (f.series) {
    case Series::B: d[n - 1] = Rational(1, 2); break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
      break;
    case Series::G2: d[0] = Rational(1, 3); break;
    default: break;
  }
  return d;
}

RatMatrix rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[col], a[pivot]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RatMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t factor_weyl_order(const CartanFactor& f) {
  switch (f.series) {
    case Series::A: return factorial(f.rank + 1);
    case Series::B:
    case Series::C: return (std::uint64_t{1} << f.rank) * factorial(f.rank);
    case Series::D: return (std::uint64_t{1} << (f.rank - 1)) * factorial(f.rank);
    case Series::G2: return 12;
    case Series::Torus: return 1;
  }
  return 1;
}

std::size_t factor_positive_root_count(const CartanFactor& f) {
  const auto n = static_cast<std::size_t>(f.rank);
  switch (f.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::G2: return 6;
    case Series::Torus: return 0;
  }
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// CartanKind

CartanKind::CartanKind(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::UnsupportedKind, "Cartan kind needs at least one factor");
  for (const auto& f : factors_) validate_factor(f);
}

CartanKind CartanKind::parse(std::string_view text) {
  std::vector<CartanFactor> factors;
  std::size_t pos = 0;
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty Cartan kind");
  while (pos <= text.size()) {
    std::size_t next = text.find('x', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string_view tok = text.substr(pos, next - pos);
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw Error(ErrorCode::ParseError, "malformed Cartan factor '" + std::string(tok) + "'");
    int rank = 0;
    const auto* first = tok.data() + 1;
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, rank);
    if (ec != std::errc() || ptr != last)
      throw Error(ErrorCode::ParseError, "malformed Cartan factor '" + std::string(tok) + "'");
    Series s{};
    switch (std::toupper(static_cast<unsigned char>(tok[0]))) {
      case 'A': s = Series::A; break;
      case 'B': s = Series::B; break;
      case 'C': s = Series::C; break;
      case 'D': s = Series::D; break;
      case 'G': s = Series::G2; break;
      case 'T': s = Series::Torus; break;
      default:
        throw Error(ErrorCode::UnsupportedKind, "unsupported series in '" + std::string(tok) + "'");
    }
    factors.push_back({s, rank});
    pos = next + 1;
  }
  return CartanKind(std::move(factors));
}

int CartanKind::rank() const noexcept {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string CartanKind::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += series_letter(factors_[i].series);
    out += std::to_string(factors_[i].rank);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RootDatum

Weight RootDatum::simple_root(std::size_t i) const {
  if (i >= rank_ || !is_simple_[i]) throw Error(ErrorCode::InvalidArgument, "no simple root at index " + std::to_string(i));
  return Weight(cartan_[i]);
}

Weight RootDatum::reflect(std::size_t i, const Weight& w) const {
  Weight out = w;
  const auto c = w[i];
  if (c == 0) return out;
  for (std::size_t j = 0; j < rank_; ++j) out[j] -= c * cartan_[i][j];
  return out;
}

Rational RootDatum::inner(const Weight& a, const Weight& b) const {
  return Rational(inner_scaled(a, b), form_scale_);
}

std::int64_t RootDatum::inner_scaled(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) s += a[i] * form_scaled_[i][j] * b[j];
  }
  return s;
}

void RootDatum::check_rank(const Weight& w, std::string_view what) const {
  if (w.rank() != rank_)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " " + w.to_string() + " has " + std::to_string(w.rank()) +
                    " coordinates, expected " + std::to_string(rank_) + " for " + kind_.to_string());
}

RootDatum build_root_datum(const CartanKind& kind) {
  RootDatum rd(kind);
  const auto n = static_cast<std::size_t>(kind.rank());
  rd.rank_ = n;
  rd.cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  rd.form_.assign(n, std::vector<Rational>(n, Rational(0)));
  rd.is_simple_.assign(n, false);
  rd.rho_ = Weight(n);
  std::size_t expected_roots = 0;

  std::size_t offset = 0;
  for (const auto& f : kind.factors()) {
    const auto r = static_cast<std::size_t>(f.rank);
    rd.weyl_order_ *= factor_weyl_order(f);
    expected_roots += factor_positive_root_count(f);
    if (f.series == Series::Torus) {
      for (std::size_t i = 0; i < r; ++i) rd.form_[offset + i][offset + i] = Rational(1);
    } else {
      const auto a = factor_cartan(f);
      const auto d = factor_half_lengths(f);
      const auto inv = rational_inverse(a);
      for (std::size_t i = 0; i < r; ++i) {
        rd.is_simple_[offset + i] = true;
        rd.simple_indices_.push_back(offset + i);
        for (std::size_t j = 0; j < r; ++j) {
          rd.cartan_[offset + i][offset + j] = a[i][j];
          rd.form_[offset + i][offset + j] = inv[i][j] * d[j];
        }
      }
    }
    offset += r;
  }

  std::int64_t scale = 1;
  for (const auto& row : rd.form_)
    for (const auto& x : row) scale = std::lcm(scale, x.den());
  rd.form_scale_ = scale;
  rd.form_scaled_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational s = rd.form_[i][j] * Rational(scale);
      rd.form_scaled_[i][j] = s.num();
    }

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping only roots with nonnegative simple-root coefficients.
  std::set<Weight> seen;
  std::deque<Root> queue;
  for (auto i : rd.simple_indices_) {
    Weight coeff(n);
    coeff[i] = 1;
    Root root{Weight(rd.cartan_[i]), coeff, 1};
    seen.insert(root.coords);
    queue.push_back(root);
  }
  while (!queue.empty()) {
    Root root = queue.front();
    queue.pop_front();
    for (auto i : rd.simple_indices_) {
      const auto c = root.coords[i];
      if (c == 0) continue;
      Root next = root;
      next.simple_coeffs[i] -= c;
      bool positive = true;
      for (std::size_t j = 0; j < n; ++j)
        if (next.simple_coeffs[j] < 0) positive = false;
      if (!positive || next.simple_coeffs.is_zero()) continue;
      next.coords = rd.reflect(i, root.coords);
      next.height = root.height - static_cast<int>(c);
      if (seen.insert(next.coords).second) queue.push_back(next);
    }
    rd.positive_roots_.push_back(std::move(root));
  }
  std::sort(rd.positive_roots_.begin(), rd.positive_roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords < b.coords;
  });
  if (rd.positive_roots_.size() != expected_roots)
    throw std::logic_error("root closure produced " + std::to_string(rd.positive_roots_.size()) +
                           " positive roots, expected " + std::to_string(expected_roots));

  Weight twice_rho(n);
  for (const auto& r : rd.positive_roots_) twice_rho += r.coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (twice_rho[i] % 2 != 0) throw std::logic_error("2*rho has an odd coordinate");
    rd.rho_[i] = twice_rho[i] / 2;
  }
  return rd;
}

// ---------------------------------------------------------------------------
// Weyl group operations

std::set<Weight> weyl_orbit(const RootDatum& rd, const Weight& w) {
  rd.check_rank(w);
  std::set<Weight> orbit{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& x : frontier)
      for (auto i : rd.simple_indices()) {
        if (x[i] == 0) continue;
        Weight y = rd.reflect(i, x);
        if (orbit.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return orbit;
}

DominantProjection dominant_projection(const RootDatum& rd, const Weight& w) {
  rd.check_rank(w);
  DominantProjection out{w, 1};
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto i : rd.simple_indices()) {
      if (out.dominant[i] < 0) {
        out.dominant = rd.reflect(i, out.dominant);
        out.det = -out.det;
        changed = true;
        break;
      }
    }
  }
  return out;
}

bool is_dominant(const RootDatum& rd, const Weight& w) {
  rd.check_rank(w);
  return std::all_of(rd.positive_roots().begin(), rd.positive_roots().end(),
                     [&](const Root& a) { return rd.inner_scaled(w, a.coords) >= 0; });
}

bool is_regular(const RootDatum& rd, const Weight& w) {
  rd.check_rank(w);
  return std::all_of(rd.positive_roots().begin(), rd.positive_roots().end(),
                     [&](const Root& a) { return rd.inner_scaled(w, a.coords) > 0; });
}

void require_dominant(const RootDatum& rd, const Weight& w, std::string_view what) {
  if (!is_dominant(rd, w))
    throw Error(ErrorCode::NotDominant, std::string(what) + " " + w.to_string() + " is not dominant for " +
                                            rd.kind().to_string());
}

}  // namespace orbitq
