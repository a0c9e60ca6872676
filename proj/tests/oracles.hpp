#pragma once

// Independent reference computations used only by the tests. None of them
// calls the Freudenthal or Klimyk code paths of the library.

#include <cstdint>
#include <deque>
#include <iterator>
#include <map>
#include <stdexcept>
#include <vector>

#include "orbitq/rootdata.hpp"

namespace oracle {

using orbitq::RootDatum;
using orbitq::Weight;
using Laurent = std::map<Weight, std::int64_t>;

struct WeylElement {
  std::vector<std::size_t> word;  ///< simple reflections, applied right to left
  int det = 1;
};

inline Weight apply(const RootDatum& rd, const WeylElement& w, const Weight& v) {
  Weight out = v;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = rd.reflect(*it, out);
  return out;
}

/// All of W, found by closing the orbit of a regular weight under simple
/// reflections (W acts simply transitively on that orbit).
inline std::vector<WeylElement> weyl_group(const RootDatum& rd) {
  Weight probe(rd.rank());
  for (auto i : rd.simple_indices()) probe[i] = 1;
  std::map<Weight, WeylElement> seen{{probe, WeylElement{}}};
  std::deque<Weight> queue{probe};
  while (!queue.empty()) {
    const Weight v = queue.front();
    queue.pop_front();
    const WeylElement w = seen.at(v);
    for (auto i : rd.simple_indices()) {
      Weight u = rd.reflect(i, v);
      if (seen.count(u)) continue;
      WeylElement next = w;
      next.word.insert(next.word.begin(), i);
      next.det = -w.det;
      seen.emplace(u, next);
      queue.push_back(std::move(u));
    }
  }
  std::vector<WeylElement> out;
  for (auto& [_, w] : seen) out.push_back(w);
  return out;
}

inline std::size_t stabiliser_size(const RootDatum& rd, const std::vector<WeylElement>& group, const Weight& v) {
  std::size_t n = 0;
  for (const auto& w : group)
    if (apply(rd, w, v) == v) ++n;
  return n;
}

inline Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out[wa + wb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Laurent alternant(const RootDatum& rd, const std::vector<WeylElement>& group, const Weight& v) {
  Laurent out;
  for (const auto& w : group) out[apply(rd, w, v)] += w.det;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// The order v < w iff (<v,rho>, v) < (<w,rho>, w) lexicographically. It is
/// total, compatible with addition, and every positive root is positive.
inline std::pair<Weight, std::int64_t> leading(const RootDatum& rd, const Laurent& p) {
  auto best = p.begin();
  auto key = [&](const Weight& w) { return rd.inner_scaled(w, rd.rho_c()); };
  for (auto it = std::next(p.begin()); it != p.end(); ++it) {
    const auto a = key(it->first);
    const auto b = key(best->first);
    if (a > b || (a == b && it->first > best->first)) best = it;
  }
  return *best;
}

/// Exact division of Laurent polynomials by leading terms.
inline Laurent divide(const RootDatum& rd, Laurent num, const Laurent& den) {
  if (den.empty()) throw std::invalid_argument("division by zero");
  const auto [lead_w, lead_c] = leading(rd, den);
  Laurent q;
  for (int guard = 0; !num.empty(); ++guard) {
    if (guard > 1'000'000) throw std::runtime_error("division did not terminate");
    const auto [top_w, top_c] = leading(rd, num);
    if (top_c % lead_c != 0) throw std::runtime_error("inexact division");
    const Weight shift = top_w - lead_w;
    const std::int64_t c = top_c / lead_c;
    q[shift] += c;
    for (const auto& [w, d] : den) {
      auto& slot = num[w + shift];
      slot -= c * d;
      if (slot == 0) num.erase(w + shift);
    }
  }
  return q;
}

/// Weyl character formula chi_lambda = A_{lambda+rho} / A_rho.
inline Laurent weyl_character(const RootDatum& rd, const std::vector<WeylElement>& group, const Weight& lambda) {
  return divide(rd, alternant(rd, group, lambda + rd.rho_c()), alternant(rd, group, rd.rho_c()));
}

/// Decomposes a character into irreducibles by repeatedly removing the
/// character of its leading weight, which is always dominant.
inline std::map<Weight, std::int64_t> peel(const RootDatum& rd, const std::vector<WeylElement>& group, Laurent chi) {
  std::map<Weight, std::int64_t> out;
  while (!chi.empty()) {
    const auto [top, c] = leading(rd, chi);
    if (!orbitq::is_dominant(rd, top)) throw std::runtime_error("leading weight not dominant");
    out[top] += c;
    for (const auto& [w, m] : weyl_character(rd, group, top)) {
      auto& slot = chi[w];
      slot -= c * m;
      if (slot == 0) chi.erase(w);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Multiplicities of the irreducibles in V_lambda_1 x ... x V_lambda_k by
/// pointwise character multiplication.
inline std::map<Weight, std::int64_t> brute_tensor(const RootDatum& rd, const std::vector<WeylElement>& group,
                                                   const std::vector<Weight>& factors) {
  Laurent chi{{Weight(rd.rank()), 1}};
  for (const auto& f : factors) chi = multiply(chi, weyl_character(rd, group, f));
  return peel(rd, group, std::move(chi));
}

/// Clebsch-Gordan for SU(2): V_a x V_b = V_|a-b| + V_|a-b|+2 + ... + V_a+b.
inline std::map<Weight, std::int64_t> clebsch_gordan(std::int64_t a, std::int64_t b) {
  std::map<Weight, std::int64_t> out;
  for (std::int64_t c = a > b ? a - b : b - a; c <= a + b; c += 2) out[Weight{c}] = 1;
  return out;
}

/// Dominant weights with simple coordinates in [0, bound] (torus slots in [-bound, bound]).
inline std::vector<Weight> dominant_box(const RootDatum& rd, std::int64_t bound) {
  std::vector<Weight> out;
  Weight w(rd.rank());
  const auto lo = [&](std::size_t i) { return rd.is_simple_index(i) ? std::int64_t{0} : -bound; };
  for (std::size_t i = 0; i < rd.rank(); ++i) w[i] = lo(i);
  for (;;) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < rd.rank() && w[i] == bound) {
      w[i] = lo(i);
      ++i;
    }
    if (i == rd.rank()) break;
    ++w[i];
  }
  return out;
}

}  // namespace oracle
