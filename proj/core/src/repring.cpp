#include "orbitq/repring.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitq/error.hpp"
#include "orbitq/rational.hpp"

namespace orbitq {

// ---------------------------------------------------------------------------
// RepRingElement

RepRingElement::RepRingElement(const RootDatum& rd, Terms terms) {
  for (const auto& [w, c] : terms) {
    require_dominant(rd, w, "highest weight");
    add(w, c);
  }
}

RepRingElement RepRingElement::irreducible(const RootDatum& rd, const Weight& highest) {
  return RepRingElement(rd, Terms{{highest, 1}});
}

std::int64_t RepRingElement::coeff(const Weight& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void RepRingElement::add(const Weight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RepRingElement& RepRingElement::operator+=(const RepRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

RepRingElement& RepRingElement::operator-=(const RepRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

RepRingElement& RepRingElement::operator*=(std::int64_t s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// FormalCharacter

std::int64_t FormalCharacter::mult(const Weight& w) const {
  const auto it = mults.find(w);
  return it == mults.end() ? 0 : it->second;
}

std::int64_t FormalCharacter::total_mass() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : mults) s += m;
  return s;
}

// ---------------------------------------------------------------------------
// Characters

namespace {

bool coords_dominant(const RootDatum& rd, const Weight& w) {
  return std::all_of(rd.simple_indices().begin(), rd.simple_indices().end(),
                     [&](std::size_t i) { return w[i] >= 0; });
}

bool coords_singular(const RootDatum& rd, const Weight& dominant) {
  return std::any_of(rd.simple_indices().begin(), rd.simple_indices().end(),
                     [&](std::size_t i) { return dominant[i] == 0; });
}

}  // namespace

std::map<Weight, std::int64_t> dominant_multiplicities(const RootDatum& rd, const Weight& lambda) {
  require_dominant(rd, lambda, "highest weight");
  const auto& roots = rd.positive_roots();

  // Dominant weights below lambda, reached by subtracting positive roots.
  std::map<Weight, int> level{{lambda, 0}};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    const int lv = level.at(mu);
    for (const auto& a : roots) {
      Weight nu = mu - a.coords;
      if (!coords_dominant(rd, nu)) continue;
      if (level.try_emplace(nu, lv + a.height).second) queue.push_back(std::move(nu));
    }
  }

  std::vector<std::pair<int, Weight>> order;
  order.reserve(level.size());
  for (const auto& [w, lv] : level) order.emplace_back(lv, w);
  std::sort(order.begin(), order.end());

  const Weight& rho = rd.rho_c();
  const Weight top = lambda + rho;
  const std::int64_t top_norm = rd.inner_scaled(top, top);

  std::map<Weight, std::int64_t> mult;
  mult.emplace(lambda, 1);
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx].second;
    std::int64_t sum = 0;
    for (const auto& a : roots) {
      Weight shifted = mu + a.coords;
      for (;;) {
        const auto dom = dominant_projection(rd, shifted).dominant;
        const auto it = mult.find(dom);
        if (it == mult.end()) break;
        sum += it->second * rd.inner_scaled(shifted, a.coords);
        shifted += a.coords;
      }
    }
    const Weight mr = mu + rho;
    const std::int64_t denom = top_norm - rd.inner_scaled(mr, mr);
    if (denom <= 0) throw std::logic_error("Freudenthal: nonpositive denominator at " + mu.to_string());
    if ((2 * sum) % denom != 0)
      throw std::logic_error("Freudenthal: non-integral multiplicity at " + mu.to_string());
    const std::int64_t m = 2 * sum / denom;
    if (m > 0) mult.emplace(mu, m);
  }
  return mult;
}

FormalCharacter irreducible_character(const RootDatum& rd, const Weight& lambda) {
  FormalCharacter chi;
  for (const auto& [mu, m] : dominant_multiplicities(rd, lambda))
    for (const auto& w : weyl_orbit(rd, mu)) chi.mults.emplace(w, m);
  return chi;
}

std::int64_t weyl_dimension(const RootDatum& rd, const Weight& lambda) {
  require_dominant(rd, lambda, "highest weight");
  const Weight shifted = lambda + rd.rho_c();
  Rational dim(1);
  for (const auto& a : rd.positive_roots())
    dim *= Rational(rd.inner_scaled(shifted, a.coords), rd.inner_scaled(rd.rho_c(), a.coords));
  if (dim.den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return dim.num();
}

std::int64_t dimension(const RootDatum& rd, const RepRingElement& x) {
  std::int64_t s = 0;
  for (const auto& [w, c] : x.terms()) s += c * weyl_dimension(rd, w);
  return s;
}

RepRingElement tensor_decompose(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  require_dominant(rd, lambda, "lambda");
  require_dominant(rd, mu, "mu");
  const bool expand_mu = weyl_dimension(rd, mu) <= weyl_dimension(rd, lambda);
  const Weight& expanded = expand_mu ? mu : lambda;
  const Weight& fixed = expand_mu ? lambda : mu;

  const Weight base = fixed + rd.rho_c();
  RepRingElement out;
  for (const auto& [w, m] : irreducible_character(rd, expanded).mults) {
    const auto proj = dominant_projection(rd, base + w);
    if (coords_singular(rd, proj.dominant)) continue;
    out.add(proj.dominant - rd.rho_c(), proj.det * m);
  }
  return out;
}

RepRingElement tensor_product(const RootDatum& rd, const RepRingElement& x, const RepRingElement& y) {
  RepRingElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const RepRingElement piece = tensor_decompose(rd, a, b);
      for (const auto& [w, c] : piece.terms()) out.add(w, ca * cb * c);
    }
  return out;
}

FormalCharacter character_product(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out;
  for (const auto& [wa, ma] : a.mults)
    for (const auto& [wb, mb] : b.mults) out.mults[wa + wb] += ma * mb;
  std::erase_if(out.mults, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RepRingElement decompose_character(const RootDatum& rd, const FormalCharacter& chi) {
  std::map<Weight, std::int64_t> rest = chi.mults;
  for (const auto& [w, m] : rest) rd.check_rank(w, "character weight");
  RepRingElement out;
  constexpr int kMaxSteps = 1 << 20;
  for (int step = 0; !rest.empty(); ++step) {
    if (step == kMaxSteps) throw Error(ErrorCode::InvalidArgument, "character decomposition did not terminate");
    auto top = rest.begin();
    std::int64_t best = rd.inner_scaled(top->first, rd.rho_c());
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
      const std::int64_t h = rd.inner_scaled(it->first, rd.rho_c());
      if (h > best) {
        best = h;
        top = it;
      }
    }
    const Weight highest = top->first;
    const std::int64_t c = top->second;
    if (!coords_dominant(rd, highest))
      throw Error(ErrorCode::InvalidArgument,
                  "not a character: highest remaining weight " + highest.to_string() + " is not dominant");
    out.add(highest, c);
    for (const auto& [w, m] : irreducible_character(rd, highest).mults) {
      auto& slot = rest[w];
      slot -= c * m;
      if (slot == 0) rest.erase(w);
    }
  }
  return out;
}

std::int64_t multiplicity_rk(const RootDatum& rd, const RepRingElement& x, const Weight& lambda) {
  require_dominant(rd, lambda, "lambda");
  return x.coeff(lambda);
}

}  // namespace orbitq
