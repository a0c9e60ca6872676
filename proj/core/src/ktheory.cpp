#include "orbitq/ktheory.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "orbitq/error.hpp"

namespace orbitq {

std::string_view to_string(RealFormKind kind) noexcept {
  switch (kind) {
    case RealFormKind::Complex: return "complex";
    case RealFormKind::EqualRankDiscreteSeries: return "discrete";
    case RealFormKind::Generic: return "generic";
  }
  return "generic";
}

RealFormKind parse_real_form_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "complex") return RealFormKind::Complex;
  if (s == "discrete" || s == "equal-rank" || s == "equalrankdiscreteseries" || s == "discrete-series")
    return RealFormKind::EqualRankDiscreteSeries;
  if (s == "generic") return RealFormKind::Generic;
  throw Error(ErrorCode::ParseError, "unknown group kind '" + std::string(text) + "'", "/group-kind");
}

// ---------------------------------------------------------------------------
// GroupDescriptor

GroupDescriptor GroupDescriptor::complex(RootDatum k_datum, std::optional<int> d, std::optional<Weight> g_rho) {
  const int dim = d.value_or(static_cast<int>(k_datum.dim_group()));
  if (dim < 0) throw Error(ErrorCode::InvalidArgument, "d must be nonnegative", "/d");
  GroupDescriptor g(std::move(k_datum), RealFormKind::Complex, dim);
  Weight rho = g_rho.value_or(g.k_datum_.rho_c());
  g.k_datum_.check_rank(rho, "g_rho");
  if (!is_regular(g.k_datum_, rho))
    throw Error(ErrorCode::NotRegular, "g_rho " + rho.to_string() + " must be regular dominant", "/g_rho");
  g.g_rho_ = std::move(rho);
  g.name_ = "complex(" + g.k_datum_.kind().to_string() + ")";
  return g;
}

GroupDescriptor GroupDescriptor::discrete_series(RootDatum k_datum, int d, std::vector<Weight> noncompact_coroots) {
  if (d < 0 || d % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "equal-rank descriptor needs even d, got " + std::to_string(d), "/d");
  GroupDescriptor g(std::move(k_datum), RealFormKind::EqualRankDiscreteSeries, d);
  if (noncompact_coroots.empty()) {
    const auto& rd = g.k_datum_;
    for (std::size_t i = 0; i < rd.rank(); ++i) {
      if (rd.is_simple_index(i)) continue;
      Weight f(rd.rank());
      f[i] = 1;
      noncompact_coroots.push_back(std::move(f));
    }
  }
  for (const auto& f : noncompact_coroots) g.k_datum_.check_rank(f, "noncompact coroot");
  g.noncompact_coroots_ = std::move(noncompact_coroots);
  g.name_ = "discrete(" + g.k_datum_.kind().to_string() + ")";
  return g;
}

GroupDescriptor GroupDescriptor::generic(RootDatum k_datum, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "d must be nonnegative", "/d");
  GroupDescriptor g(std::move(k_datum), RealFormKind::Generic, d);
  g.name_ = "generic(" + g.k_datum_.kind().to_string() + ")";
  return g;
}

GroupDescriptor GroupDescriptor::preset(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  GroupDescriptor g = [&] {
    if (s == "SL2C") return complex(build_root_datum("A1"), 3);
    if (s == "SL3C") return complex(build_root_datum("A2"), 8);
    if (s == "SL2R") return discrete_series(build_root_datum("T1"), 2, {Weight{1}});
    // K = S(U(2) x U(1)) seen through SU(2) x U(1); coordinates (a, c) with
    // a the SU(2) weight and c the central character. Noncompact roots
    // e1-e3, e2-e3 vanish on a+c and c-a respectively.
    if (s == "SU21") return discrete_series(build_root_datum("A1xT1"), 4, {Weight{1, 1}, Weight{-1, 1}});
    throw Error(ErrorCode::UnsupportedKind, "unknown group preset '" + std::string(name) + "'", "/group");
  }();
  g.name_ = s;
  return g;
}

// ---------------------------------------------------------------------------
// KTheoryClass

KTheoryClass::KTheoryClass(int degree, Terms terms) : degree_(degree % 2) {
  for (const auto& [w, c] : terms) add(w, c);
}

KTheoryClass KTheoryClass::generator(int degree, const Weight& lambda) {
  KTheoryClass y(degree);
  y.add(lambda, 1);
  return y;
}

std::int64_t KTheoryClass::coeff(const Weight& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void KTheoryClass::add(const Weight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same_degree(const KTheoryClass& a, const KTheoryClass& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::ParityMismatch, "cannot combine K-theory classes of degree " + std::to_string(a.degree()) +
                                               " and " + std::to_string(b.degree()));
}

void require_kind(const GroupDescriptor& g, RealFormKind kind, std::string_view op) {
  if (g.kind() != kind)
    throw Error(ErrorCode::WrongRealForm, std::string(op) + " needs a " + std::string(to_string(kind)) +
                                              " descriptor, got " + std::string(to_string(g.kind())),
                "/group-kind");
}

void require_degree(const GroupDescriptor& g, const KTheoryClass& y) {
  if (y.degree() != g.degree())
    throw Error(ErrorCode::ParityMismatch, "class of degree " + std::to_string(y.degree()) +
                                               " does not live in K_d for d = " + std::to_string(g.d()));
}

}  // namespace

KTheoryClass& KTheoryClass::operator+=(const KTheoryClass& o) {
  require_same_degree(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

KTheoryClass& KTheoryClass::operator-=(const KTheoryClass& o) {
  require_same_degree(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

KTheoryClass& KTheoryClass::operator*=(std::int64_t s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Ledger operations

KTheoryClass dirac_induct(const GroupDescriptor& g, const RepRingElement& x) {
  const auto& rd = g.k_datum();
  KTheoryClass y(g.degree());
  for (const auto& [w, c] : x.terms()) {
    if (w.rank() != rd.rank())
      throw Error(ErrorCode::DatumMismatch,
                  "weight " + w.to_string() + " does not belong to " + rd.kind().to_string());
    require_dominant(rd, w, "highest weight");
    y.add(w, c);
  }
  return y;
}

std::int64_t reduce_rg(const GroupDescriptor& g, const KTheoryClass& y, const Weight& lambda) {
  require_dominant(g.k_datum(), lambda, "lambda");
  require_degree(g, y);
  return y.coeff(lambda);
}

KTheoryClass quantize_induced(const GroupDescriptor& g, const OrbitProductManifold& n) {
  if (!(n.root_datum() == g.k_datum()))
    throw Error(ErrorCode::DatumMismatch, "manifold over " + n.root_datum().kind().to_string() +
                                              " cannot be induced to a group with K of type " +
                                              g.k_datum().kind().to_string());
  const RepRingElement qk = quantize_compact(n);
  KTheoryClass y(g.degree());
  for (const auto& [lambda, m] : qk.terms()) y.add(lambda, multiplicity_rk(n.root_datum(), qk, lambda));
  return y;
}

KTheoryClass orbit_method_class(const GroupDescriptor& g, const Weight& lambda) {
  require_dominant(g.k_datum(), lambda, "lambda");
  return quantize_induced(g, OrbitProductManifold(g.k_datum(), {lambda}));
}

SeriesLabel principal_series_label(const GroupDescriptor& g, const Weight& lambda) {
  require_kind(g, RealFormKind::Complex, "principal series labelling");
  require_dominant(g.k_datum(), lambda, "lambda");
  return SeriesLabel{SeriesLabel::Series::Principal, lambda + *g.g_rho(), 1};
}

namespace {

void require_hc_regular(const GroupDescriptor& g, const Weight& mu) {
  const auto& rd = g.k_datum();
  for (const auto& a : rd.positive_roots())
    if (rd.inner_scaled(mu, a.coords) == 0)
      throw Error(ErrorCode::NotRegular, "parameter " + mu.to_string() + " lies on the wall of compact root " +
                                             a.coords.to_string(), "/mu");
  for (const auto& f : g.noncompact_coroots()) {
    const auto pairing = std::inner_product(mu.vec().begin(), mu.vec().end(), f.vec().begin(), std::int64_t{0});
    if (pairing == 0)
      throw Error(ErrorCode::NotRegular, "parameter " + mu.to_string() + " lies on a noncompact wall", "/mu");
  }
}

}  // namespace

DiscreteSeriesClass discrete_series_label(const GroupDescriptor& g, const Weight& mu) {
  require_kind(g, RealFormKind::EqualRankDiscreteSeries, "discrete series labelling");
  const auto& rd = g.k_datum();
  rd.check_rank(mu, "mu");
  require_hc_regular(g, mu);
  const Weight lambda = mu - rd.rho_c();
  if (!is_dominant(rd, lambda))
    throw Error(ErrorCode::NotDominant, "mu - rho_c = " + lambda.to_string() + " is not dominant", "/mu");
  const int sign = (g.d() / 2) % 2 == 0 ? 1 : -1;
  return DiscreteSeriesClass{SeriesLabel{SeriesLabel::Series::Discrete, mu, sign},
                             sign * KTheoryClass::generator(g.degree(), lambda)};
}

std::int64_t discrete_series_multiplicity(const GroupDescriptor& g, const KTheoryClass& y, const Weight& mu) {
  const auto label = discrete_series_label(g, mu).label;
  return label.sign * reduce_rg(g, y, mu - g.k_datum().rho_c());
}

}  // namespace orbitq
