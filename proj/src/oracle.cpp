#include "alcove/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr size_t kMaxWitnesses = 20;

}  // namespace

void SweepResult::fail(Json witness) {
  ++failed;
  if (counterexamples.size() < kMaxWitnesses) counterexamples.push_back(std::move(witness));
}

// ------------------------------------------------------------------ Bruhat

std::vector<std::vector<Generator>> all_reduced_words(const AffineWeyl& G, const ExtAffineElt& w,
                                                      int64_t max_length) {
  const int64_t len = G.length(w);
  if (len > max_length) {
    throw BudgetError("length " + std::to_string(len) + " exceeds the oracle budget " + std::to_string(max_length));
  }
  if (len == 0) return {{}};
  std::vector<std::vector<Generator>> out;
  for (const auto& g : G.generators()) {
    const ExtAffineElt rest = G.generator(g) * w;
    if (G.length(rest) != len - 1) continue;
    for (auto& tail : all_reduced_words(G, rest, max_length)) {
      tail.insert(tail.begin(), g);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

bool brute_bruhat(const AffineWeyl& G, const ExtAffineElt& u, const ExtAffineElt& w, int64_t max_length) {
  const auto words = all_reduced_words(G, w, max_length);
  if (u.trans().det() != w.trans().det()) return false;
  const int64_t target_len = G.length(u);
  for (const auto& word : words) {
    ExtAffineElt prod = G.identity();
    for (const auto& g : word) prod = prod * G.generator(g);
    const ExtAffineElt delta = prod.inverse() * w;
    const size_t k = word.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
      if (std::popcount(mask) != target_len) continue;
      ExtAffineElt x = G.identity();
      for (size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) x = x * G.generator(word[i]);
      }
      x = x * delta;
      if (x == u && G.length(x) == target_len) return true;
    }
  }
  return false;
}

// ------------------------------------------------------------------ up order

namespace {

// Per embedding: partial sums of v (from the first coordinate) non-negative
// and total zero, i.e. v is a non-negative combination of simple roots.
bool in_root_cone(const WeightVec& v) {
  for (int j = 0; j < v.embeddings(); ++j) {
    int64_t s = 0;
    for (int i = 0; i < v.rank(); ++i) {
      s += v(j, i);
      if (s < 0) return false;
    }
    if (s != 0) return false;
  }
  return true;
}

bool in_box(const ExtAffineElt& x, int64_t box) {
  for (int64_t v : x.trans().raw()) {
    if (v > box || v < -box) return false;
  }
  return true;
}

}  // namespace

bool brute_up(const AffineWeyl& G, const ExtAffineElt& u, const ExtAffineElt& w, int64_t box) {
  if (u == w) return true;
  if (u.trans().det() != w.trans().det()) return false;
  const RootDatum& d = G.datum();
  const int64_t den = G.sample_denominator();
  const WeightVec top = G.sample_image(w);
  if (!in_root_cone(top - G.sample_image(u))) return false;
  std::set<ExtAffineElt> seen{u};
  std::deque<ExtAffineElt> queue{u};
  bool clipped = false;
  while (!queue.empty()) {
    const ExtAffineElt x = queue.front();
    queue.pop_front();
    const WeightVec y = G.sample_image(x);
    for (const auto& beta : d.positive_roots()) {
      // Walls <., beta^vee> = m strictly above the alcove, nearest first; the
      // reflected point moves up along beta, so once it leaves the interval it
      // never comes back.
      for (int64_t m = floor_div(d.pairing(y, beta), den) + 1;; ++m) {
        const ExtAffineElt z = G.affine_reflection(beta, m) * x;
        if (!in_root_cone(top - G.sample_image(z))) break;
        if (!in_box(z, box)) {
          clipped = true;
          continue;
        }
        if (z == w) return true;
        if (seen.insert(z).second) queue.push_back(z);
      }
    }
  }
  if (clipped) throw InconclusiveError("up-order search left the box of radius " + std::to_string(box));
  return false;
}

// ------------------------------------------------------------------ enumeration

std::vector<ExtAffineElt> elements_up_to_length(const AffineWeyl& G, int64_t max_length) {
  std::set<ExtAffineElt> out;
  std::vector<ExtAffineElt> layer;
  for (const auto& d : G.omega_representatives()) {
    if (out.insert(d).second) layer.push_back(d);
  }
  for (int64_t l = 1; l <= max_length; ++l) {
    std::vector<ExtAffineElt> next;
    for (const auto& x : layer) {
      for (const auto& g : G.generators()) {
        ExtAffineElt y = G.generator(g) * x;
        if (G.length(y) == l && out.insert(y).second) next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  return {out.begin(), out.end()};
}

std::vector<ExtAffineElt> dominant_box(const AffineWeyl& G, int64_t radius) {
  const RootDatum& d = G.datum();
  const int dim = d.n() * d.f();
  std::vector<int64_t> e(static_cast<size_t>(dim), -radius);
  std::vector<ExtAffineElt> out;
  while (true) {
    const WeightVec t(d.n(), d.f(), e);
    for (const auto& w : d.weyl_group()) {
      ExtAffineElt x(t, w);
      if (G.is_dominant_elt(x)) out.push_back(std::move(x));
    }
    int i = dim - 1;
    while (i >= 0 && e[static_cast<size_t>(i)] == radius) e[static_cast<size_t>(i--)] = -radius;
    if (i < 0) break;
    ++e[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtAffineElt> sample_taus(const RootDatum& d, int64_t min_depth, size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = d.n(), f = d.f();
  const int64_t p = d.p();
  std::set<ExtAffineElt> out;
  const auto& W = d.weyl_group();
  // Gaps <mu, alpha^vee> are drawn from the depth window so rejection stays cheap.
  std::uniform_int_distribution<int64_t> gap(min_depth + 1, p - 1 - min_depth);
  std::uniform_int_distribution<int64_t> centre(0, p - 2);
  std::uniform_int_distribution<size_t> pick(0, W.size() - 1);
  size_t attempts = 0;
  while (out.size() < count && attempts < 200 * count + 1000) {
    ++attempts;
    WeightVec mu(n, f);
    for (int j = 0; j < f; ++j) {
      mu(j, n - 1) = (j == f - 1) ? centre(rng) : 0;
      for (int i = n - 2; i >= 0; --i) mu(j, i) = mu(j, i + 1) + gap(rng);
    }
    if (d.lowest_alcove_depth(mu - d.eta()) < min_depth) continue;
    out.insert(ExtAffineElt(mu, W[pick(rng)]));
  }
  return {out.begin(), out.end()};
}

// ------------------------------------------------------------------ report

bool SweepReport::all_pass() const { return total_failed() == 0; }

int64_t SweepReport::total_failed() const {
  int64_t t = 0;
  for (const auto& r : results) t += r.failed;
  return t;
}

Json SweepReport::to_json() const {
  Json cfg{{"n", config.n},
           {"f", config.f},
           {"p", config.p},
           {"box", config.box},
           {"order_length", config.order_length},
           {"length_samples", config.length_samples},
           {"taus", config.taus},
           {"heavy_taus", config.heavy_taus},
           {"seed", config.seed},
           {"mutation", config.mutation.empty() ? Json(nullptr) : Json(config.mutation)}};
  Json sweeps = Json::array();
  for (const auto& r : results) {
    Json ce = Json::array();
    for (const auto& c : r.counterexamples) ce.push_back(c);
    sweeps.push_back(Json{{"name", r.name},
                          {"checked", r.checked},
                          {"failed", r.failed},
                          {"pass", r.failed == 0},
                          {"stats", r.stats},
                          {"counterexamples", std::move(ce)}});
  }
  return Json{{"config", std::move(cfg)},
              {"all_pass", all_pass()},
              {"total_failed", total_failed()},
              {"sweeps", std::move(sweeps)}};
}

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names{
      "bruhat-order",   "up-order",        "length",         "reduced1",          "omega",
      "reduced2",       "subregular",      "reduced-w0",     "0gen",              "presentations",
      "membership",     "characterization", "wobv",          "outer",             "dl-decent",
      "isolating",      "covering-char",   "obvweight",      "elimination",       "connectivity",
      "wtintersect"};
  return names;
}

const std::vector<std::string>& mutation_names() {
  static const std::vector<std::string> names{"drop-restricted-hypothesis", "drop-uparrow", "depth-shrink",
                                              "0gen-drop-c0", "0gen-drop-zr"};
  return names;
}

// ------------------------------------------------------------------ sweeps

namespace {

struct Ctx {
  SweepConfig cfg;
  Herzig H;
  std::vector<ExtAffineElt> taus;        // h_eta-deep
  std::vector<ExtAffineElt> heavy;       // prefix of taus
  std::vector<ExtAffineElt> deep_taus;   // 2 h_eta-deep
  std::vector<ExtAffineElt> restricted;  // W~_1 in the box (centre shifts included)
  std::vector<ExtAffineElt> dominant;    // W~^+ in the box

  const RootDatum& d() const { return H.datum(); }
  const AffineWeyl& G() const { return H.group(); }
  const WeightsDL& D() const { return H.dl(); }
  bool mut(const char* m) const { return cfg.mutation == m; }
};

Json elt(const ExtAffineElt& x) { return to_json(x); }

void sweep_bruhat(const Ctx& c, SweepResult& r) {
  const auto els = elements_up_to_length(c.G(), c.cfg.order_length);
  r.stats["elements"] = els.size();
  int64_t related = 0;
  for (const auto& w : els) {
    for (const auto& u : els) {
      ++r.checked;
      const bool fast = c.G().bruhat_leq(u, w);
      const bool brute = brute_bruhat(c.G(), u, w, c.cfg.order_length);
      related += brute;
      if (fast != brute) r.fail(Json{{"u", elt(u)}, {"w", elt(w)}, {"bruhat_leq", fast}, {"brute", brute}});
    }
  }
  r.stats["related_pairs"] = related;
}

void sweep_up(const Ctx& c, SweepResult& r) {
  const auto els = elements_up_to_length(c.G(), c.cfg.order_length);
  int64_t related = 0, inconclusive = 0;
  const int64_t box = 4 * (c.cfg.order_length + c.d().n());
  for (const auto& w : els) {
    for (const auto& u : els) {
      ++r.checked;
      bool brute = false;
      try {
        brute = brute_up(c.G(), u, w, box);
      } catch (const InconclusiveError&) {
        ++inconclusive;
        r.fail(Json{{"u", elt(u)}, {"w", elt(w)}, {"error", "oracle inconclusive"}});
        continue;
      }
      related += brute;
      bool fast = false;
      try {
        fast = c.G().up_leq(u, w, box);
      } catch (const InconclusiveError&) {
        r.fail(Json{{"u", elt(u)}, {"w", elt(w)}, {"error", "up_leq inconclusive"}});
        continue;
      }
      if (fast != brute) r.fail(Json{{"u", elt(u)}, {"w", elt(w)}, {"up_leq", fast}, {"brute", brute}});
    }
  }
  r.stats["related_pairs"] = related;
  r.stats["inconclusive"] = inconclusive;
}

void sweep_length(const Ctx& c, SweepResult& r) {
  std::mt19937_64 rng(c.cfg.seed * 7919 + 17);
  const auto& W = c.d().weyl_group();
  std::uniform_int_distribution<int64_t> entry(-c.cfg.length_radius, c.cfg.length_radius);
  std::uniform_int_distribution<size_t> pick(0, W.size() - 1);
  const int dim = c.d().n() * c.d().f();
  for (int64_t i = 0; i < c.cfg.length_samples; ++i) {
    std::vector<int64_t> e(static_cast<size_t>(dim));
    for (auto& x : e) x = entry(rng);
    const ExtAffineElt x(WeightVec(c.d().n(), c.d().f(), e), W[pick(rng)]);
    ++r.checked;
    const int64_t a = c.G().length(x), b = c.G().length_closed_form(x);
    if (a != b) r.fail(Json{{"w", elt(x)}, {"hyperplanes", a}, {"closed_form", b}});
  }
}

// w2 candidates: W~_1 normally, W~^+ under the restricted-hypothesis drop.
const std::vector<ExtAffineElt>& w2_domain(const Ctx& c) {
  return c.mut("drop-restricted-hypothesis") ? c.dominant : c.restricted;
}

bool up_below(const Ctx& c, const ExtAffineElt& w1, const ExtAffineElt& w2) {
  if (c.mut("drop-uparrow")) return true;
  try {
    return c.G().up_leq(w1, c.G().w_h().inverse() * w2);
  } catch (const InconclusiveError&) {
    return false;
  }
}

void sweep_reduced1(const Ctx& c, SweepResult& r) {
  const AffineWeyl& G = c.G();
  for (const auto& alpha : c.d().simple_roots()) {
    const ExtAffineElt sw0 = G.simple_reflection(alpha) * G.w0();
    for (const auto& w2 : w2_domain(c)) {
      // The up-order hypothesis is only meaningful for w2 in W~_1; dropping that
      // hypothesis drops this one with it.
      const bool gate = !c.mut("drop-restricted-hypothesis");
      for (const auto& w1 : c.dominant) {
        if (gate && !up_below(c, w1, w2)) continue;
        ++r.checked;
        const int64_t lhs = G.length(w2.inverse() * sw0 * w1);
        const int64_t rhs = G.length(w2) + G.length(sw0) + G.length(w1);
        if (lhs != rhs) {
          r.fail(Json{{"alpha", to_json(alpha)}, {"w1", elt(w1)}, {"w2", elt(w2)}, {"length", lhs}, {"sum", rhs}});
        }
      }
    }
  }
}

void sweep_omega(const Ctx& c, SweepResult& r) {
  const RootDatum& d = c.d();
  const AffineWeyl& G = c.G();
  for (const auto& alpha : d.simple_roots()) {
    const ExtAffineElt sa = G.simple_reflection(alpha);
    const WeightVec wa = d.fundamental_weight(alpha);
    for (const auto& w2 : w2_domain(c)) {
      const ExtAffineElt x = sa * w2;
      const WeightVec omega = (G.diamond(x) * x.inverse()).trans();
      auto report = [&](const char* item, const std::string& root) {
        r.fail(Json{{"item", item}, {"alpha", to_json(alpha)}, {"w2", elt(w2)}, {"omega", omega.to_string()},
                    {"root", root}});
      };
      ++r.checked;
      if (d.pairing(omega, alpha) != 1) report("1", alpha.label());
      for (const auto& beta : d.simple_roots()) {
        if (beta == alpha) continue;
        ++r.checked;
        if (d.cartan(beta, alpha) == 0 && d.pairing(omega, beta) != 0) report("2", beta.label());
        ++r.checked;
        if (d.cartan(beta, alpha) <= 0 && d.pairing(omega, beta) > 0) report("3", beta.label());
      }
      for (const auto& gamma : d.positive_roots()) {
        if (d.pairing(wa, gamma) > 1) continue;
        ++r.checked;
        if (d.pairing(omega, gamma) > 1) report("4", gamma.label());
      }
    }
  }
}

bool omega_alpha_minuscule(const RootDatum& d, const Root& alpha) {
  const WeightVec wa = d.fundamental_weight(alpha);
  for (const auto& b : d.positive_roots()) {
    if (d.pairing(wa, b) > 1) return false;
  }
  return true;
}

void sweep_reduced2(const Ctx& c, SweepResult& r) {
  const AffineWeyl& G = c.G();
  for (const auto& alpha : c.d().simple_roots()) {
    if (!omega_alpha_minuscule(c.d(), alpha)) continue;
    const ExtAffineElt sa = G.simple_reflection(alpha);
    for (const auto& w2 : w2_domain(c)) {
      const ExtAffineElt D = G.diamond(sa * w2);
      const ExtAffineElt whole = w2.inverse() * sa * G.w0();
      ++r.checked;
      const int64_t lhs = G.length(D.inverse()) + G.length(D * whole);
      if (lhs != G.length(whole)) {
        r.fail(Json{{"alpha", to_json(alpha)}, {"w2", elt(w2)}, {"sum", lhs}, {"length", G.length(whole)}});
      }
    }
  }
}

void sweep_subregular(const Ctx& c, SweepResult& r) {
  const AffineWeyl& G = c.G();
  for (const auto& alpha : c.d().simple_roots()) {
    if (!omega_alpha_minuscule(c.d(), alpha)) continue;
    const ExtAffineElt sa = G.simple_reflection(alpha);
    for (const auto& w2 : w2_domain(c)) {
      const ExtAffineElt D = G.diamond(sa * w2);
      const ExtAffineElt bound = G.w0() * G.w_h().inverse() * D;
      for (const auto& w1 : c.dominant) {
        if (!up_below(c, w1, w2)) continue;
        ++r.checked;
        const ExtAffineElt x = D * w2.inverse() * sa * G.w0() * w1;
        if (!G.bruhat_leq(x, bound)) {
          r.fail(Json{{"alpha", to_json(alpha)}, {"w1", elt(w1)}, {"w2", elt(w2)}, {"lhs", elt(x)}, {"bound", elt(bound)}});
        }
      }
    }
  }
}

void sweep_reduced_w0(const Ctx& c, SweepResult& r) {
  const AffineWeyl& G = c.G();
  for (const auto& w : w2_domain(c)) {
    ++r.checked;
    if (G.length(G.w0() * w) != G.length(G.w0()) + G.length(w)) {
      r.fail(Json{{"w", elt(w)}, {"factorization", "w0 w"}});
    }
    ++r.checked;
    const ExtAffineElt a = (G.w_h() * w).inverse();
    if (G.length(a * G.w0() * w) != G.length(a) + G.length(G.w0() * w)) {
      r.fail(Json{{"w", elt(w)}, {"factorization", "(w_h w)^-1 w0 w"}});
    }
  }
}

// mu - eta in C0 (or its closure under the depth shrink).
bool in_c0(const Ctx& c, const WeightVec& mu) {
  const RootDatum& d = c.d();
  const int64_t slack = c.mut("depth-shrink") ? 1 : 0;
  for (const auto& b : d.positive_roots()) {
    const int64_t v = d.pairing(mu, b);  // <(mu - eta) + eta, beta^vee>
    if (v < 1 - slack || v > d.p() - 1 + slack) return false;
  }
  return true;
}

void sweep_0gen(const Ctx& c, SweepResult& r) {
  const RootDatum& d = c.d();
  const int n = d.n(), f = d.f();
  const int64_t p = d.p();
  const auto& W = d.weyl_group();
  // mu with last entries 0: the statement only relates weights differing by ZR.
  std::vector<WeightVec> mus;
  {
    std::vector<int64_t> e(static_cast<size_t>(n * f), 0);
    std::function<void(int)> rec = [&](int idx) {
      if (idx < 0) {
        WeightVec mu(n, f, e);
        if (in_c0(c, mu)) mus.push_back(mu);
        return;
      }
      if (idx % n == n - 1) {
        e[static_cast<size_t>(idx)] = 0;
        rec(idx - 1);
        return;
      }
      for (int64_t g = 0; g <= p + 1; ++g) {
        e[static_cast<size_t>(idx)] = e[static_cast<size_t>(idx + 1)] + g;
        rec(idx - 1);
      }
    };
    rec(n * f - 1);
  }
  r.stats["weights"] = mus.size();
  const int dim = n * f;
  const int64_t B = c.cfg.box;
  for (const auto& mu : mus) {
    for (const auto& s : W) {
      for (const auto& cc : W) {
        const FiniteWeylElt s2 = cc * s * d.frobenius_pi(cc).inverse();
        const WeightVec cmu = cc.act(mu);
        std::vector<int64_t> k(static_cast<size_t>(dim), -B);
        while (true) {
          const WeightVec kv(n, f, k);
          const WeightVec mu2 = cmu + p * kv - s2.act(d.frobenius_pi(kv));
          const bool zr = mu2.det() == mu.det();
          const bool c0 = in_c0(c, mu2);
          const bool hyp = (c.mut("0gen-drop-c0") || c0) && (c.mut("0gen-drop-zr") || zr);
          if (hyp) {
            ++r.checked;
            if (!(mu2 == mu && s2 == s)) {
              r.fail(Json{{"s", s.to_string()}, {"mu", mu.to_string()}, {"w", s2.to_string()}, {"lambda", mu2.to_string()}});
            }
          }
          int i = dim - 1;
          while (i >= 0 && k[static_cast<size_t>(i)] == B) k[static_cast<size_t>(i--)] = -B;
          if (i < 0) break;
          ++k[static_cast<size_t>(i)];
        }
      }
    }
  }
}

std::vector<SerreWeight> all_weights_with_residues(const RootDatum& d, const std::set<int64_t>& residues) {
  const int n = d.n(), f = d.f();
  const int64_t p = d.p();
  std::vector<SerreWeight> out;
  std::vector<int64_t> gaps(static_cast<size_t>((n - 1) * f), 0);
  while (true) {
    for (int64_t r : residues) {
      WeightVec l(n, f);
      for (int j = 0; j < f; ++j) {
        l(j, n - 1) = (j == 0) ? r : 0;
        for (int i = n - 2; i >= 0; --i) l(j, i) = l(j, i + 1) + gaps[static_cast<size_t>(j * (n - 1) + i)];
      }
      out.push_back(SerreWeight::make(d, l));
    }
    int i = static_cast<int>(gaps.size()) - 1;
    while (i >= 0 && gaps[static_cast<size_t>(i)] == p - 1) gaps[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++gaps[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void sweep_presentations(const Ctx& c, SweepResult& r) {
  const auto& D = c.D();
  int64_t n_pres = 1;
  for (int j = 0; j < c.d().f(); ++j) n_pres *= c.d().n();
  std::set<int64_t> res{0, 1};
  for (const auto& sigma : all_weights_with_residues(c.d(), res)) {
    const auto pres = D.presentations_of(sigma);
    if (D.depth(sigma) < 0) {
      ++r.checked;
      if (!pres.empty()) r.fail(Json{{"sigma", to_json(sigma)}, {"issue", "presentations of a non 0-deep weight"}});
      continue;
    }
    ++r.checked;
    if (static_cast<int64_t>(pres.size()) != n_pres) {
      r.fail(Json{{"sigma", to_json(sigma)}, {"issue", "presentation count"}, {"count", pres.size()}});
    }
    for (const auto& pr : pres) {
      ++r.checked;
      if (!D.is_valid_presentation(pr) || !(D.serre_weight(pr) == sigma)) {
        r.fail(Json{{"sigma", to_json(sigma)}, {"issue", "round trip"}, {"presentation", to_json(pr)}});
      }
    }
    ++r.checked;
    if (D.d_sigma(sigma) < 0 || D.d_sigma(sigma) > c.d().h_eta()) {
      r.fail(Json{{"sigma", to_json(sigma)}, {"issue", "d_sigma out of range"}, {"d_sigma", D.d_sigma(sigma)}});
    }
  }
}

void sweep_membership(const Ctx& c, SweepResult& r) {
  for (const auto& t : c.taus) {
    ++r.checked;
    const auto a = c.D().jh_set({t}), b = c.D().jh_set_uparrow({t});
    if (a != b) {
      r.fail(Json{{"R", elt(t)}, {"size_adm", a.size()}, {"size_uparrow", b.size()}});
    }
  }
}

void sweep_characterization(const Ctx& c, SweepResult& r) {
  std::map<size_t, int64_t> sizes;
  for (const auto& t : c.taus) {
    ++r.checked;
    const auto a = c.H.wset({t}), b = c.H.wset_by_definition({t});
    ++sizes[a.size()];
    if (a != b) r.fail(Json{{"tau", elt(t)}, {"size_characterization", a.size()}, {"size_definition", b.size()}});
  }
  Json hist = Json::object();
  for (const auto& [k, v] : sizes) hist[std::to_string(k)] = v;
  r.stats["wset_sizes"] = hist;
}

void sweep_wobv(const Ctx& c, SweepResult& r) {
  size_t order = c.d().weyl_group().size();
  std::map<size_t, int64_t> sizes;
  for (const auto& t : c.taus) {
    const auto w = c.H.wset({t});
    const auto o = c.H.wobv({t});
    ++sizes[o.size()];
    ++r.checked;
    if (!std::includes(w.begin(), w.end(), o.begin(), o.end())) r.fail(Json{{"tau", elt(t)}, {"issue", "wobv not in wset"}});
    // Omega-presented members of W? are obvious.
    for (const auto& pr : c.H.wset_presentations({t})) {
      if (!c.G().is_in_omega(pr.w)) continue;
      ++r.checked;
      const auto s = c.D().serre_weight(pr);
      if (!o.contains(s)) r.fail(Json{{"tau", elt(t)}, {"issue", "Omega-presented weight not obvious"}, {"sigma", to_json(s)}});
    }
    if (c.D().genericity({t}) >= 2 * c.d().h_eta()) {
      ++r.checked;
      if (o.size() != order) r.fail(Json{{"tau", elt(t)}, {"issue", "|wobv| != |W|"}, {"size", o.size()}});
    }
  }
  Json hist = Json::object();
  for (const auto& [k, v] : sizes) hist[std::to_string(k)] = v;
  r.stats["wobv_sizes"] = hist;
}

void sweep_outer(const Ctx& c, SweepResult& r) {
  std::map<size_t, int64_t> sizes;
  int64_t shallow = 0;
  for (const auto& t : c.taus) {
    const auto jh = c.D().jh_set({t});
    std::set<SerreWeight> distinct;
    for (const auto& o : c.D().jh_outer({t})) {
      distinct.insert(o.sigma);
      ++r.checked;
      if (!jh.contains(o.sigma)) r.fail(Json{{"R", elt(t)}, {"issue", "outer factor outside JH"}, {"sigma", to_json(o.sigma)}});
      // The definition only admits d_sigma-deep weights as outer factors.
      if (c.D().depth(o.sigma) < c.D().d_sigma(o.sigma)) {
        ++shallow;
        continue;
      }
      ++r.checked;
      if (!c.D().is_outer(o.sigma, {t})) r.fail(Json{{"R", elt(t)}, {"issue", "is_outer rejects"}, {"sigma", to_json(o.sigma)}});
    }
    ++sizes[distinct.size()];
  }
  Json hist = Json::object();
  for (const auto& [k, v] : sizes) hist[std::to_string(k)] = v;
  r.stats["distinct_outer_sizes"] = hist;
  r.stats["not_d_sigma_deep"] = shallow;
}

void sweep_decent(const Ctx& c, SweepResult& r) {
  for (const auto& t : c.taus) {
    const int64_t g = c.D().genericity({t});
    for (const auto& sigma : c.D().jh_set({t})) {
      const int64_t m = c.D().depth(sigma) - c.D().d_sigma(sigma);
      if (m < 0) continue;
      ++r.checked;
      if (g < m) r.fail(Json{{"R", elt(t)}, {"sigma", to_json(sigma)}, {"m", m}, {"genericity", g}});
    }
  }
}

void sweep_isolating(const Ctx& c, SweepResult& r) {
  const auto& D = c.D();
  const int64_t h = c.d().h_eta();
  int64_t covering_pairs = 0;
  for (const auto& t : c.heavy) {
    const auto jh = D.jh_set({t});
    std::set<SerreWeight> outer;
    for (const auto& o : D.jh_outer({t})) outer.insert(o.sigma);
    for (const auto& kappa : jh) {
      if (D.depth(kappa) < h + D.d_sigma(kappa)) continue;
      for (const auto& sigma : outer) {
        if (!D.covers(kappa, sigma)) continue;
        ++covering_pairs;
        ++r.checked;
        if (!(kappa == sigma)) r.fail(Json{{"R", elt(t)}, {"kappa", to_json(kappa)}, {"sigma", to_json(sigma)}});
      }
    }
  }
  r.stats["covering_pairs"] = covering_pairs;
}

size_t restricted_index(const AffineWeyl& G, const ExtAffineElt& w) {
  const auto& R1 = G.restricted_elements();
  return static_cast<size_t>(std::find(R1.begin(), R1.end(), w) - R1.begin());
}

void sweep_covering(const Ctx& c, SweepResult& r) {
  const auto& D = c.D();
  const auto& G = c.G();
  const int64_t h = c.d().h_eta();
  int64_t pairs = 0;
  for (const auto& t : c.heavy) {
    const auto jh = D.jh_set({t});
    for (const auto& kappa : jh) {
      if (D.depth(kappa) < h + D.d_sigma(kappa)) continue;
      for (const auto& sigma : jh) {
        if (!D.covers(kappa, sigma)) continue;
        ++pairs;
        for (const auto& kp : D.presentations_of(kappa)) {
          ++r.checked;
          const ExtAffineElt top = G.w0() * kp.w;
          bool found = false;
          for (const auto& sp : D.presentations_of(sigma)) {
            const auto target = [&] {
              auto a = kp.omega.det(), b = kp.w.trans().det(), cc = sp.w.trans().det();
              for (size_t j = 0; j < a.size(); ++j) a[j] += b[j] - cc[j];
              return a;
            }();
            const auto shifted = D.with_det({ExtAffineElt(sp.omega, c.d().identity())}, target);
            if (!shifted) continue;
            const WeightVec shift = shifted->mu() - kp.omega;
            bool inside = true;
            for (const auto& x : D.lower_interval_w0(restricted_index(G, sp.w))) {
              if (!G.bruhat_leq(ExtAffineElt::translation(shift) * x, top)) {
                inside = false;
                break;
              }
            }
            if (inside) {
              found = true;
              break;
            }
          }
          if (!found) {
            r.fail(Json{{"R", elt(t)}, {"kappa", to_json(kappa)}, {"kappa_presentation", to_json(kp)},
                        {"sigma", to_json(sigma)}});
          }
        }
      }
    }
  }
  r.stats["covering_pairs"] = pairs;
}

// The factorization search of the obvious weight statement, run independently
// of Herzig::connections (and over W~^+ for w2 under the restricted drop).
void sweep_obvweight(const Ctx& c, SweepResult& r) {
  const AffineWeyl& G = c.G();
  const RootDatum& d = c.d();
  int64_t edges = 0;
  for (const auto& t : c.heavy) {
    const TameParam tau{t};
    const auto w = c.H.wset(tau);
    for (const auto& e : c.H.connections(tau)) {
      ++r.checked;
      const auto why = c.H.validate_edge(e, tau);
      if (!why.empty()) r.fail(Json{{"tau", elt(t)}, {"edge", to_json(e)}, {"issue", why}});
    }
    for (const auto& alpha : d.simple_roots()) {
      const ExtAffineElt sa = G.simple_reflection(alpha);
      for (const auto& w2 : w2_domain(c)) {
        const bool gate = !c.mut("drop-restricted-hypothesis");
        for (const auto& w1 : c.dominant) {
          if (gate && !up_below(c, w1, w2)) continue;
          const ExtAffineElt x = t * w1.inverse() * G.w0() * sa * w2;
          if (d.lowest_alcove_depth(x.trans() - d.eta()) < d.h_eta()) continue;
          ++edges;
          ++r.checked;
          const SerreWeight s1 = c.H.outer_weight({x}, d.w0() * w2.fin());
          const SerreWeight s2 = c.H.outer_weight({x}, d.w0() * sa.fin() * w2.fin());
          if (!w.contains(s1) || !w.contains(s2)) {
            r.fail(Json{{"tau", elt(t)}, {"alpha", to_json(alpha)}, {"w1", elt(w1)}, {"w2", elt(w2)},
                        {"R", elt(x)}, {"sigma", to_json(s1)}, {"sigma2", to_json(s2)},
                        {"sigma_in_wset", w.contains(s1)}, {"sigma2_in_wset", w.contains(s2)}});
          }
        }
      }
    }
  }
  r.stats["factorizations"] = edges;
}

void sweep_elimination(const Ctx& c, SweepResult& r) {
  const auto& D = c.D();
  int64_t certificates = 0, refused_members = 0;
  for (const auto& t : c.heavy) {
    const TameParam tau{t};
    const auto w = c.H.wset(tau);
    std::set<int64_t> residues{0};
    for (const auto& s : w) residues.insert(s.lambda()(0, c.d().n() - 1));
    for (const auto& sigma : all_weights_with_residues(c.d(), residues)) {
      if (D.depth(sigma) < 0 || D.depth(sigma) < D.d_sigma(sigma)) continue;
      ++r.checked;
      if (w.contains(sigma)) {
        try {
          c.H.eliminate(sigma, tau);
          r.fail(Json{{"tau", elt(t)}, {"sigma", to_json(sigma)}, {"issue", "member of W? was eliminated"}});
        } catch (const PreconditionError& e) {
          if (e.reason() != "not eliminable") r.fail(Json{{"tau", elt(t)}, {"sigma", to_json(sigma)}, {"issue", e.what()}});
          ++refused_members;
        }
        continue;
      }
      try {
        const auto cert = c.H.eliminate(sigma, tau);
        const auto why = c.H.replay(cert);
        if (!why.empty()) r.fail(Json{{"tau", elt(t)}, {"sigma", to_json(sigma)}, {"issue", why}});
        ++certificates;
      } catch (const Error& e) {
        r.fail(Json{{"tau", elt(t)}, {"sigma", to_json(sigma)}, {"issue", e.what()}});
      }
    }
  }
  r.stats["certificates"] = certificates;
  r.stats["members_refused"] = refused_members;
}

void sweep_connectivity(const Ctx& c, SweepResult& r) {
  std::map<size_t, int64_t> sizes;
  for (const auto& t : c.deep_taus) {
    const TameParam tau{t};
    const auto g = c.H.connectivity_graph(tau);
    ++sizes[g.vertices.size()];
    ++r.checked;
    if (!g.connected() || !g.all_reach_extremal() || g.stray_edges != 0) {
      r.fail(Json{{"tau", elt(t)}, {"graph", graph_to_json(g, c.H)}});
    }
    for (const auto& e : g.edges) {
      ++r.checked;
      const auto why = c.H.validate_edge(e, tau);
      if (!why.empty()) r.fail(Json{{"tau", elt(t)}, {"edge", to_json(e)}, {"issue", why}});
    }
  }
  Json hist = Json::object();
  for (const auto& [k, v] : sizes) hist[std::to_string(k)] = v;
  r.stats["vertex_counts"] = hist;
}

void sweep_wtintersect(const Ctx& c, SweepResult& r) {
  const RootDatum& d = c.d();
  int64_t yes = 0, no = 0, left_differs = 0;
  std::vector<ExtAffineElt> taus;
  for (const auto& t : c.taus) {
    if (c.D().genericity({t}) >= d.n()) taus.push_back(t);
  }
  if (taus.size() > c.cfg.heavy_taus) taus.resize(c.cfg.heavy_taus);
  for (const auto& t : taus) {
    std::vector<ExtAffineElt> rhos;
    for (const auto& a : c.D().adm_eta_sorted()) rhos.push_back(a * t);
    for (const auto& other : c.taus) rhos.push_back(other);
    for (const auto& rho : rhos) {
      if (c.D().genericity({rho}) < d.n() - 1) continue;
      ++r.checked;
      const auto rep = c.H.equivalence_report({rho}, {t});
      (rep.adm ? yes : no) += 1;
      left_differs += rep.adm != rep.adm_left;
      if (!rep.agree()) {
        r.fail(Json{{"rho", elt(rho)}, {"tau", elt(t)}, {"adm", rep.adm}, {"jh_wset", rep.jh_wset},
                    {"jh_wobv", rep.jh_wobv}, {"outer_wset", rep.outer_wset}});
      }
    }
  }
  r.stats["true_pairs"] = yes;
  r.stats["false_pairs"] = no;
  r.stats["left_form_differs"] = left_differs;
}

using SweepFn = void (*)(const Ctx&, SweepResult&);

const std::map<std::string, SweepFn>& sweep_table() {
  static const std::map<std::string, SweepFn> t{
      {"bruhat-order", sweep_bruhat},         {"up-order", sweep_up},
      {"length", sweep_length},               {"reduced1", sweep_reduced1},
      {"omega", sweep_omega},                 {"reduced2", sweep_reduced2},
      {"subregular", sweep_subregular},       {"reduced-w0", sweep_reduced_w0},
      {"0gen", sweep_0gen},                   {"presentations", sweep_presentations},
      {"membership", sweep_membership},       {"characterization", sweep_characterization},
      {"wobv", sweep_wobv},                   {"outer", sweep_outer},
      {"dl-decent", sweep_decent},            {"isolating", sweep_isolating},
      {"covering-char", sweep_covering},      {"obvweight", sweep_obvweight},
      {"elimination", sweep_elimination},     {"connectivity", sweep_connectivity},
      {"wtintersect", sweep_wtintersect}};
  return t;
}

}  // namespace

SweepReport lemma_sweeps(const SweepConfig& config) {
  if (!config.mutation.empty()) {
    const auto& m = mutation_names();
    if (std::find(m.begin(), m.end(), config.mutation) == m.end()) {
      throw InvalidInput("unknown mutation '" + config.mutation + "'");
    }
  }
  for (const auto& name : config.only) {
    if (!sweep_table().contains(name)) throw InvalidInput("unknown sweep '" + name + "'");
  }
  Ctx ctx{config, Herzig(RootDatum(config.n, config.f, config.p)), {}, {}, {}, {}, {}};
  const RootDatum& d = ctx.d();
  ctx.taus = sample_taus(d, d.h_eta(), config.taus, config.seed);
  ctx.heavy.assign(ctx.taus.begin(), ctx.taus.begin() + static_cast<long>(std::min(config.heavy_taus, ctx.taus.size())));
  for (const auto& t : ctx.taus) {
    if (ctx.D().genericity({t}) >= 2 * d.h_eta()) ctx.deep_taus.push_back(t);
  }
  ctx.dominant = dominant_box(ctx.G(), config.box);
  for (const auto& w : ctx.dominant) {
    if (ctx.G().is_restricted_elt(w)) ctx.restricted.push_back(w);
  }

  std::vector<std::string> names;
  for (const auto& n : sweep_names()) {
    if (config.only.empty() || std::find(config.only.begin(), config.only.end(), n) != config.only.end()) {
      names.push_back(n);
    }
  }
  SweepReport rep;
  rep.config = config;
  rep.results.resize(names.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < names.size(); i = next++) {
      SweepResult& res = rep.results[i];
      res.name = names[i];
      try {
        sweep_table().at(names[i])(ctx, res);
      } catch (const std::exception& e) {
        res.fail(Json{{"error", e.what()}});
      }
    }
  };
  const int threads = std::max(1, config.threads);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rep;
}

}  // namespace alcove
