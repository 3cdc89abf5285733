#include "alcove/weights_dl.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

WeightVec reduce_center_impl(const RootDatum& d, const WeightVec& lambda) {
  const int64_t r = d.center_residue(lambda);
  WeightVec out = lambda;
  for (int j = 0; j < d.f(); ++j) {
    const int64_t target = j == 0 ? r : 0;
    const int64_t shift = target - lambda(j, d.n() - 1);
    for (int i = 0; i < d.n(); ++i) out(j, i) += shift;
  }
  return out;
}

// Moves R(t_mu s) within its orbit (c = 1) to t_mu' s with mu' - eta entries at
// most (p+1)/2 in size: k is the rounding of (p - s pi)^-1 (mu - eta), computed
// from the series sum_m (s pi)^m / p^(m+1).
WeightVec pull_toward_eta(const RootDatum& d, const WeightVec& mu, const FiniteWeylElt& s) {
  const int dim = d.n() * d.f();
  std::vector<int> image(static_cast<size_t>(dim));
  for (int idx = 0; idx < dim; ++idx) {
    WeightVec e(d.n(), d.f());
    e(idx / d.n(), idx % d.n()) = 1;
    const WeightVec img = s.act(d.frobenius_pi(e));
    for (int t = 0; t < dim; ++t)
      if (img(t / d.n(), t % d.n()) == 1) image[static_cast<size_t>(idx)] = t;
  }
  const WeightVec b = mu - d.eta();
  std::vector<long double> term(static_cast<size_t>(dim)), y(static_cast<size_t>(dim), 0.0L);
  for (int idx = 0; idx < dim; ++idx) term[static_cast<size_t>(idx)] = b(idx / d.n(), idx % d.n());
  const long double p = static_cast<long double>(d.p());
  for (int m = 0; m < 64; ++m) {
    std::vector<long double> next(static_cast<size_t>(dim));
    for (int idx = 0; idx < dim; ++idx) {
      term[static_cast<size_t>(idx)] /= p;
      y[static_cast<size_t>(idx)] += term[static_cast<size_t>(idx)];
      next[static_cast<size_t>(image[static_cast<size_t>(idx)])] = term[static_cast<size_t>(idx)];
    }
    term.swap(next);
  }
  WeightVec k(d.n(), d.f());
  for (int idx = 0; idx < dim; ++idx) k(idx / d.n(), idx % d.n()) = -std::llround(y[static_cast<size_t>(idx)]);
  return mu + d.p() * k - s.act(d.frobenius_pi(k));
}

// All k with last entry 0 in each embedding and h_k <= bound.
std::vector<WeightVec> small_weights(int n, int f, int64_t bound) {
  std::vector<std::vector<int64_t>> rows;
  std::vector<int64_t> cur(static_cast<size_t>(n), -bound);
  cur[n - 1] = 0;
  while (true) {
    const auto [lo, hi] = std::minmax_element(cur.begin(), cur.end());
    if (*hi - *lo <= bound) rows.push_back(cur);
    int i = n - 2;
    while (i >= 0 && ++cur[i] > bound) cur[i--] = -bound;
    if (i < 0) break;
  }
  std::vector<WeightVec> out;
  std::vector<size_t> idx(static_cast<size_t>(f), 0);
  while (true) {
    WeightVec w(n, f);
    for (int j = 0; j < f; ++j)
      for (int i = 0; i < n; ++i) w(j, i) = rows[idx[j]][i];
    out.push_back(std::move(w));
    int j = f - 1;
    while (j >= 0 && ++idx[j] == rows.size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

}  // namespace

SerreWeight SerreWeight::make(const RootDatum& datum, const WeightVec& lambda) {
  if (lambda.rank() != datum.n() || lambda.embeddings() != datum.f()) throw InvalidInput("weight shape does not match datum");
  if (!datum.is_restricted(lambda)) throw InvalidInput("Serre weight needs a p-restricted weight, got " + lambda.to_string());
  return SerreWeight(reduce_center_impl(datum, lambda));
}

WeightsDL::WeightsDL(RootDatum datum) : G_(std::move(datum)) {
  adm_sorted_ = G_.adm_set(G_.datum().eta());
  adm_eta_.insert(adm_sorted_.begin(), adm_sorted_.end());
  for (const auto& w : G_.restricted_elements()) w0_intervals_.push_back(G_.bruhat_interval(G_.w0() * w, 40));
}

WeightVec WeightsDL::reduce_center(const WeightVec& lambda) const { return reduce_center_impl(datum(), lambda); }

// ------------------------------------------------------------- Serre weights

bool WeightsDL::is_valid_presentation(const SerrePresentation& pres) const {
  return G_.is_restricted_elt(pres.w) && datum().in_lowest_alcove(pres.omega - datum().eta());
}

SerreWeight WeightsDL::serre_weight(const SerrePresentation& pres) const {
  if (!G_.is_restricted_elt(pres.w)) throw InvalidInput("presentation element is not in W~_1: " + pres.w.to_string());
  const WeightVec nu = pres.omega - datum().eta();
  if (!datum().in_lowest_alcove(nu)) throw InvalidInput("omega - eta is not in C0: " + pres.omega.to_string());
  return SerreWeight::make(datum(), G_.p_dot(G_.frobenius_pi_inv(pres.w), nu));
}

SerrePresentation WeightsDL::normalize(const SerrePresentation& pres) const {
  const ExtAffineElt w = G_.center_normalized(pres.w);
  const WeightVec z = pres.w.trans() - w.trans();
  return {w, pres.omega + z};
}

ExtAffineElt WeightsDL::alcove_element(const SerreWeight& sigma) const {
  const WeightVec& l = sigma.lambda();
  if (!datum().is_p_regular(l)) throw PreconditionError("not p-regular", "Serre weight " + l.to_string() + " lies on a p-wall");
  return G_.element_of_alcove(l + datum().eta(), datum().p());
}

std::vector<SerrePresentation> WeightsDL::presentations_of(const SerreWeight& sigma) const {
  if (!datum().is_p_regular(sigma.lambda())) return {};
  const ExtAffineElt x = alcove_element(sigma);
  const WeightVec nu = G_.p_dot(x.inverse(), sigma.lambda());
  std::vector<SerrePresentation> out;
  for (const auto& delta : G_.omega_representatives()) {
    SerrePresentation pres{G_.frobenius_pi(x * delta.inverse()), G_.p_dot(delta, nu) + datum().eta()};
    out.push_back(normalize(pres));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int64_t WeightsDL::depth(const SerreWeight& sigma) const { return datum().depth(sigma.lambda()); }

int64_t WeightsDL::d_sigma(const SerreWeight& sigma) const {
  const ExtAffineElt y = G_.w_h() * alcove_element(sigma);
  int64_t d = 0;
  for (int k = 0; k < datum().n(); ++k) {
    WeightVec v(datum().n(), datum().f());
    for (int j = 0; j < datum().f(); ++j)
      for (int i = 0; i < k; ++i) v(j, i) = 1;
    d = std::max(d, datum().h_value(y.apply(v, 1)));
  }
  return d;
}

SerreWeight WeightsDL::reflect(const SerreWeight& sigma) const {
  if (!datum().is_p_regular(sigma.lambda())) {
    throw PreconditionError("not p-regular", "the reflection map is defined on p-regular weights");
  }
  return SerreWeight::make(datum(), G_.p_dot(G_.w_h(), sigma.lambda()));
}

// ------------------------------------------------------------ DL presentations

std::optional<WeightVec> WeightsDL::solve_p_minus_wpi(const FiniteWeylElt& w, const WeightVec& b) const {
  // (w pi k) at (j+1, w_{j+1}(i)) is k at (j, i); along each cycle of that
  // coordinate map P the equation reads p k_{P(d)} = b_{P(d)} + k_d.
  const int n = datum().n();
  const int f = datum().f();
  const __int128 p = datum().p();
  auto next = [&](int c) {
    const int j = c / n;
    const int i = c % n;
    const int j2 = (j + 1) % f;
    return j2 * n + w(j2, i);
  };
  WeightVec k(n, f);
  std::vector<bool> done(static_cast<size_t>(n * f), false);
  for (int start = 0; start < n * f; ++start) {
    if (done[start]) continue;
    std::vector<int> cyc{start};
    for (int c = next(start); c != start; c = next(c)) cyc.push_back(c);
    const size_t L = cyc.size();
    __int128 pl = 1;
    for (size_t t = 0; t < L; ++t) {
      pl *= p;
      if (pl > (static_cast<__int128>(1) << 100)) throw BudgetError("Frobenius cycle too long for exact arithmetic");
    }
    // k_{d0} (p^L - 1) = sum_{t=1..L} p^{t-1} b_{d_t}, with d_L = d0.
    __int128 num = 0;
    for (size_t t = L; t >= 1; --t) num = num * p + b(cyc[t % L] / n, cyc[t % L] % n);
    if (num % (pl - 1) != 0) return std::nullopt;
    __int128 prev = num / (pl - 1);
    k(cyc[0] / n, cyc[0] % n) = static_cast<int64_t>(prev);
    done[start] = true;
    for (size_t t = 1; t < L; ++t) {
      const __int128 v = static_cast<__int128>(b(cyc[t] / n, cyc[t] % n)) + prev;
      if (v % p != 0) return std::nullopt;
      prev = v / p;
      k(cyc[t] / n, cyc[t] % n) = static_cast<int64_t>(prev);
      done[cyc[t]] = true;
    }
    if (p * k(cyc[0] / n, cyc[0] % n) != static_cast<__int128>(b(cyc[0] / n, cyc[0] % n)) + prev) return std::nullopt;
  }
  return k;
}

bool WeightsDL::dl_equal(const DLPresentation& a, const DLPresentation& b) const {
  if (a == b) return true;
  for (const auto& c : datum().weyl_group()) {
    if (b.s() != c * a.s() * datum().frobenius_pi(c).inverse()) continue;
    if (solve_p_minus_wpi(b.s(), b.mu() - c.act(a.mu()))) return true;
  }
  return false;
}

std::vector<DLPresentation> WeightsDL::lowest_alcove_presentations(const DLPresentation& r) const {
  const RootDatum& d = datum();
  const int64_t p = d.p();
  std::set<DLPresentation> out;
  const WeightVec mu = pull_toward_eta(d, r.mu(), r.s());
  for (const auto& c : d.weyl_group()) {
    const FiniteWeylElt s2 = c * r.s() * d.frobenius_pi(c).inverse();
    const WeightVec base = c.act(mu);
    WeightVec k0(d.n(), d.f());
    for (int j = 0; j < d.f(); ++j)
      for (int i = 0; i < d.n(); ++i) k0(j, i) = -floor_div(base(j, i), p);
    const WeightVec rem = base + p * k0;
    // A lowest alcove nu = rem + p k - s2 pi(k0 + k) forces (p-1) h_k < 2p + h_{k0}.
    const int64_t bound = (2 * p + d.h_value(k0) - 1) / (p - 1);
    if (bound > 6) throw BudgetError("presentation orbit search needs |k| <= " + std::to_string(bound));
    for (const auto& k : small_weights(d.n(), d.f(), bound)) {
      const WeightVec nu = rem + p * k - s2.act(d.frobenius_pi(k0 + k));
      if (!d.in_lowest_alcove(nu - d.eta())) continue;
      out.insert(DLPresentation{ExtAffineElt(reduce_center(nu), s2)});
    }
  }
  return {out.begin(), out.end()};
}

int64_t WeightsDL::genericity(const DLPresentation& r) const {
  int64_t best = -1;
  for (const auto& q : lowest_alcove_presentations(r)) best = std::max(best, datum().lowest_alcove_depth(q.mu() - datum().eta()));
  return best;
}

std::optional<DLPresentation> WeightsDL::deepest_presentation(const DLPresentation& r) const {
  std::optional<DLPresentation> best;
  int64_t depth = -1;
  for (const auto& q : lowest_alcove_presentations(r)) {
    const int64_t m = datum().lowest_alcove_depth(q.mu() - datum().eta());
    if (m > depth) {
      depth = m;
      best = q;
    }
  }
  return best;
}

std::optional<DLPresentation> WeightsDL::with_det(const DLPresentation& r, const std::vector<int64_t>& target) const {
  const RootDatum& d = datum();
  const auto cur = r.mu().det();
  std::vector<int64_t> t(static_cast<size_t>(d.f()));
  for (int j = 0; j < d.f(); ++j) {
    const int64_t diff = target[j] - cur[j];
    if (diff % d.n() != 0) return std::nullopt;
    t[j] = diff / d.n();
  }
  std::vector<int64_t> c;
  if (!d.solve_p_minus_pi(t, c)) return std::nullopt;
  WeightVec shift(d.n(), d.f());
  for (int j = 0; j < d.f(); ++j)
    for (int i = 0; i < d.n(); ++i) shift(j, i) = t[j];
  return DLPresentation{ExtAffineElt(r.mu() + shift, r.s())};
}

void WeightsDL::require_deep(const DLPresentation& r, int64_t m, const std::string& what) const {
  const int64_t depth = datum().lowest_alcove_depth(r.mu() - datum().eta());
  if (depth < m) {
    throw PreconditionError("insufficient depth", what + " needs mu - eta " + std::to_string(m) + "-deep in C0; " +
                                                      r.to_string() + " has depth " + std::to_string(depth));
  }
}

// ------------------------------------------------------------- JH sets

std::vector<SerrePresentation> WeightsDL::jh_presentations(const DLPresentation& r) const {
  require_deep(r, datum().h_eta(), "JH set");
  const WeightVec& eta = datum().eta();
  const ExtAffineElt r_inv = r.elt.inverse();
  std::vector<SerrePresentation> out;
  const auto& R1 = G_.restricted_elements();
  for (size_t idx = 0; idx < R1.size(); ++idx) {
    const ExtAffineElt top_inv = (G_.w0() * R1[idx]).inverse();
    for (const auto& a : adm_sorted_) {
      const ExtAffineElt x = r.elt * a * top_inv;
      if (!x.fin().is_identity()) continue;
      const WeightVec& omega = x.trans();
      if (!datum().in_lowest_alcove(omega - eta)) continue;
      const ExtAffineElt shift = r_inv * G_.translation(omega);
      bool inside = true;
      for (const auto& y : w0_intervals_[idx]) {
        if (!adm_eta_.contains(shift * y)) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back({R1[idx], omega});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<SerreWeight> WeightsDL::jh_set(const DLPresentation& r) const {
  std::set<SerreWeight> out;
  for (const auto& pres : jh_presentations(r)) out.insert(serre_weight(pres));
  return out;
}

std::set<SerreWeight> WeightsDL::jh_set_uparrow(const DLPresentation& r) const {
  require_deep(r, datum().h_eta(), "JH set");
  std::set<SerreWeight> out;
  for (const auto& w : G_.restricted_elements()) {
    for (const auto& u : G_.up_lower_dominant(G_.w_h() * w)) {
      const WeightVec omega = (r.elt * u.inverse()).trans();
      if (!datum().in_lowest_alcove(omega - datum().eta())) continue;
      out.insert(serre_weight({w, omega}));
    }
  }
  return out;
}

std::vector<OuterFactor> WeightsDL::jh_outer(const DLPresentation& r) const {
  require_deep(r, datum().h_eta(), "outer JH factors");
  std::vector<OuterFactor> out;
  for (const auto& v : datum().weyl_group()) {
    const ExtAffineElt vd = G_.diamond(G_.finite(v));
    const WeightVec omega = (r.elt * (G_.w_h() * vd).inverse()).trans();
    SerrePresentation pres{vd, omega};
    out.push_back({v, serre_weight(pres), pres});
  }
  return out;
}

bool WeightsDL::is_outer(const SerreWeight& sigma, const DLPresentation& r) const {
  const auto pres = presentations_of(sigma);
  if (pres.empty()) return false;
  const int64_t d = d_sigma(sigma);
  for (const auto& pr : pres) {
    if (datum().lowest_alcove_depth(pr.omega - datum().eta()) < d) continue;
    const WeightVec back = (G_.w_h() * pr.w).inverse().trans();
    for (const auto& s : datum().weyl_group()) {
      if (dl_equal(DLPresentation{ExtAffineElt(pr.omega - s.act(back), s)}, r)) return true;
    }
  }
  return false;
}

std::vector<DLPresentation> WeightsDL::outer_family(const SerrePresentation& pres) const {
  const WeightVec back = (G_.w_h() * pres.w).inverse().trans();
  std::vector<DLPresentation> out;
  for (const auto& u : datum().weyl_group()) out.push_back({ExtAffineElt(pres.omega - u.act(back), u)});
  return out;
}

bool WeightsDL::covers(const SerreWeight& kappa, const SerreWeight& sigma) const {
  const int64_t need = datum().h_eta() + d_sigma(kappa);
  if (depth(kappa) < need) {
    throw PreconditionError("insufficient depth", "covering needs kappa " + std::to_string(need) + "-deep, " +
                                                      kappa.to_string() + " has depth " + std::to_string(depth(kappa)));
  }
  const auto pres = presentations_of(kappa);
  for (const auto& r : outer_family(pres.front())) {
    if (!jh_set(r).contains(sigma)) return false;
  }
  return true;
}

}  // namespace alcove
