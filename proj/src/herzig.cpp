#include "alcove/herzig.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "alcove/errors.hpp"

namespace alcove {

bool ConnectivityGraph::connected() const {
  return std::all_of(component.begin(), component.end(), [](int c) { return c == 0; });
}

bool ConnectivityGraph::all_reach_extremal() const {
  return std::all_of(distance.begin(), distance.end(), [](int d) { return d >= 0; });
}

Herzig::Herzig(RootDatum datum) : dl_(std::move(datum)) {}

ExtAffineElt Herzig::present(const TameParam& tau, int64_t m, const std::string& what) const {
  const RootDatum& d = datum();
  if (d.lowest_alcove_depth(tau.elt.trans() - d.eta()) >= m) return tau.elt;
  const auto best = dl_.deepest_presentation(tau.as_dl());
  if (best && d.lowest_alcove_depth(best->mu() - d.eta()) >= m) return best->elt;
  throw PreconditionError("insufficient genericity", what + " needs a " + std::to_string(m) +
                                                         "-generic parameter; " + tau.to_string() + " is " +
                                                         std::to_string(dl_.genericity(tau.as_dl())) + "-generic");
}

std::vector<SerrePresentation> Herzig::wset_presentations(const TameParam& tau) const {
  const ExtAffineElt s = present(tau, datum().h_eta(), "W?");
  std::vector<SerrePresentation> out;
  const auto& R1 = group().restricted_elements();
  for (size_t idx = 0; idx < R1.size(); ++idx) {
    for (const auto& x : dl_.lower_interval_w0(idx)) {
      const ExtAffineElt t = s * x.inverse();
      if (!t.fin().is_identity()) continue;
      if (!datum().in_lowest_alcove(t.trans() - datum().eta())) continue;
      out.push_back({R1[idx], t.trans()});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<SerreWeight> Herzig::wset(const TameParam& tau) const {
  std::set<SerreWeight> out;
  for (const auto& pres : wset_presentations(tau)) out.insert(dl_.serre_weight(pres));
  return out;
}

std::set<SerreWeight> Herzig::wset_by_definition(const TameParam& tau) const {
  const ExtAffineElt s = present(tau, datum().h_eta(), "W?");
  std::set<SerreWeight> out;
  for (const auto& sigma : dl_.jh_set({s})) out.insert(dl_.reflect(sigma));
  return out;
}

std::set<SerreWeight> Herzig::wobv(const TameParam& tau) const {
  const ExtAffineElt s = present(tau, datum().h_eta(), "W_obv");
  const auto all = wset(tau);
  std::set<SerreWeight> out;
  for (const auto& w : group().restricted_elements()) {
    // tau = t_omega v w~ forces v = fin(tau w~^-1) and omega = its translation.
    const WeightVec omega = (s * w.inverse()).trans();
    if (!datum().in_lowest_alcove(omega - datum().eta())) continue;
    const SerreWeight sigma = dl_.serre_weight({w, omega});
    if (all.contains(sigma)) out.insert(sigma);
  }
  return out;
}

bool Herzig::is_extremal(const SerreWeight& sigma, const TameParam& tau) const { return wobv(tau).contains(sigma); }

// ------------------------------------------------------------- elimination

namespace {

std::vector<int64_t> det_minus(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  std::vector<int64_t> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

EliminationCertificate Herzig::eliminate(const SerreWeight& sigma, const TameParam& tau) const {
  const ExtAffineElt s = present(tau, datum().h_eta(), "weight elimination");
  const auto pres = dl_.presentations_of(sigma);
  if (pres.empty()) throw PreconditionError("insufficient depth", "Serre weight " + sigma.to_string() + " is not 0-deep");
  const int64_t d = dl_.d_sigma(sigma);
  if (dl_.depth(sigma) < d) {
    throw PreconditionError("insufficient depth", "weight elimination needs sigma " + std::to_string(d) +
                                                      "-deep; " + sigma.to_string() + " has depth " +
                                                      std::to_string(dl_.depth(sigma)));
  }
  if (wset(tau).contains(sigma)) {
    throw PreconditionError("not eliminable", sigma.to_string() + " lies in W?(" + tau.to_string() + ")");
  }
  const auto target = det_minus(s.trans().det(), datum().eta().det());
  const auto& W = datum().weyl_group();
  for (const auto& pr : pres) {
    const auto family = dl_.outer_family(pr);
    for (size_t k = 0; k < family.size(); ++k) {
      const DLPresentation& r = family[k];
      if (!dl_.is_outer(sigma, r)) continue;
      EliminationCertificate cert{sigma, s, pr, W[k], r, dl_.lowest_alcove_presentations(r), {}};
      if (cert.lowest.empty()) continue;
      bool ok = true;
      for (const auto& y : cert.lowest) {
        auto shifted = dl_.with_det(y, target);
        if (shifted && dl_.adm_eta().contains(shifted->elt.inverse() * s)) ok = false;
        cert.det_matched.push_back(std::move(shifted));
      }
      if (ok) return cert;
    }
  }
  throw Error("no elimination certificate found for " + sigma.to_string() + " against " + s.to_string());
}

std::string Herzig::replay(const EliminationCertificate& cert) const {
  const auto& W = datum().weyl_group();
  const auto it = std::find(W.begin(), W.end(), cert.u);
  if (it == W.end()) return "u is not in W";
  if (!dl_.is_valid_presentation(cert.presentation)) return "presentation is not a lowest alcove presentation";
  if (!(dl_.serre_weight(cert.presentation) == cert.sigma)) return "presentation does not name sigma";
  if (!(dl_.outer_family(cert.presentation)[static_cast<size_t>(it - W.begin())] == cert.R)) return "R is not R_u";
  if (!dl_.is_outer(cert.sigma, cert.R)) return "sigma is not an outer factor of R";
  if (datum().lowest_alcove_depth(cert.R.mu() - datum().eta()) < 0 && dl_.genericity(cert.R) < 0) return "R is not 0-generic";
  const auto lowest = dl_.lowest_alcove_presentations(cert.R);
  if (lowest != cert.lowest) return "lowest alcove presentations differ";
  if (cert.det_matched.size() != lowest.size()) return "det-matched list has the wrong size";
  const auto target = det_minus(cert.tau.trans().det(), datum().eta().det());
  for (size_t i = 0; i < lowest.size(); ++i) {
    if (!dl_.dl_equal(lowest[i], cert.R)) return "listed presentation is not a presentation of R";
    const auto shifted = dl_.with_det(lowest[i], target);
    if (shifted != cert.det_matched[i]) return "det-matched shift differs";
    if (shifted && dl_.adm_eta().contains(shifted->elt.inverse() * cert.tau)) {
      return "tau lies in t_nu s Adm(eta) for " + shifted->to_string();
    }
  }
  return {};
}

// ------------------------------------------------------------- connections

SerreWeight Herzig::outer_weight(const DLPresentation& r, const FiniteWeylElt& v) const {
  const ExtAffineElt vd = group().diamond(group().finite(v));
  return dl_.serre_weight({vd, (r.elt * (group().w_h() * vd).inverse()).trans()});
}

std::vector<ConnectionEdge> Herzig::connections(const TameParam& tau) const {
  const ExtAffineElt s = present(tau, datum().h_eta(), "connection search");
  const AffineWeyl& G = group();
  const ExtAffineElt w0 = G.w0();
  const ExtAffineElt wh_inv = G.w_h().inverse();
  std::vector<ConnectionEdge> out;
  for (const auto& alpha : datum().simple_roots()) {
    const ExtAffineElt sa = G.simple_reflection(alpha);
    for (const auto& w2 : G.restricted_elements()) {
      for (const auto& w1 : G.up_lower_dominant(wh_inv * w2)) {
        const ExtAffineElt w = s * w1.inverse() * w0 * sa * w2;
        if (datum().lowest_alcove_depth(w.trans() - datum().eta()) < datum().h_eta()) continue;
        const DLPresentation r{w};
        const FiniteWeylElt v1 = datum().w0() * w2.fin();
        const FiniteWeylElt v2 = datum().w0() * sa.fin() * w2.fin();
        out.push_back({outer_weight(r, v1), outer_weight(r, v2), r, alpha, w1, w2});
      }
    }
  }
  return out;
}

std::optional<ConnectionEdge> Herzig::connect(const SerreWeight& a, const SerreWeight& b, const TameParam& tau) const {
  if (a == b) return std::nullopt;
  for (auto& e : connections(tau)) {
    if (e.sigma == a && e.sigma2 == b) return e;
    if (e.sigma == b && e.sigma2 == a) return e;
  }
  return std::nullopt;
}

std::string Herzig::validate_edge(const ConnectionEdge& e, const TameParam& tau) const {
  const AffineWeyl& G = group();
  const ExtAffineElt s = present(tau, datum().h_eta(), "connection search");
  if (!e.alpha.is_simple() || !e.alpha.is_positive()) return "alpha is not simple";
  if (!G.is_restricted_elt(e.w2)) return "w2 is not in W~_1";
  if (!G.is_dominant_elt(e.w1)) return "w1 is not in W~^+";
  if (!G.up_leq(e.w1, G.w_h().inverse() * e.w2)) return "w1 is not up-below w_h^-1 w2";
  const ExtAffineElt lhs = e.R.elt.inverse() * s;
  if (!(lhs == e.w2.inverse() * G.simple_reflection(e.alpha) * G.w0() * e.w1)) return "factorization does not hold";
  if (datum().lowest_alcove_depth(e.R.mu() - datum().eta()) < datum().h_eta()) return "R is not h_eta-generic";
  const FiniteWeylElt v1 = datum().w0() * e.w2.fin();
  const FiniteWeylElt v2 = datum().w0() * datum().reflection(e.alpha) * e.w2.fin();
  if (!(outer_weight(e.R, v1) == e.sigma) || !(outer_weight(e.R, v2) == e.sigma2)) return "endpoints are not the outer weights";
  return {};
}

ConnectivityGraph Herzig::connectivity_graph(const TameParam& tau) const {
  present(tau, 2 * datum().h_eta(), "connectivity graph");
  ConnectivityGraph g;
  const auto vs = wset(tau);
  g.vertices.assign(vs.begin(), vs.end());
  const auto obv = wobv(tau);
  std::map<SerreWeight, int> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    index[g.vertices[i]] = static_cast<int>(i);
    g.extremal.push_back(obv.contains(g.vertices[i]));
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (auto& e : connections(tau)) {
    const auto ia = index.find(e.sigma);
    const auto ib = index.find(e.sigma2);
    if (ia == index.end() || ib == index.end()) {
      ++g.stray_edges;
      continue;
    }
    if (ia->second == ib->second) continue;
    const auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) continue;
    adj[ia->second].push_back(ib->second);
    adj[ib->second].push_back(ia->second);
    g.edges.push_back(std::move(e));
  }

  const size_t nv = g.vertices.size();
  g.component.assign(nv, -1);
  int comp = 0;
  for (size_t i = 0; i < nv; ++i) {
    if (g.component[i] >= 0) continue;
    std::deque<int> q{static_cast<int>(i)};
    g.component[i] = comp;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : adj[x]) {
        if (g.component[y] < 0) {
          g.component[y] = comp;
          q.push_back(y);
        }
      }
    }
    ++comp;
  }

  // Multi-source BFS from the extremal vertices; next[x] points one hop closer.
  g.distance.assign(nv, -1);
  std::vector<int> next(nv, -1);
  std::deque<int> q;
  for (size_t i = 0; i < nv; ++i) {
    if (g.extremal[i]) {
      g.distance[i] = 0;
      q.push_back(static_cast<int>(i));
    }
  }
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    for (int y : adj[x]) {
      if (g.distance[y] < 0) {
        g.distance[y] = g.distance[x] + 1;
        next[y] = x;
        q.push_back(y);
      }
    }
  }
  g.chain.resize(nv);
  for (size_t i = 0; i < nv; ++i) {
    if (g.distance[i] < 0) continue;
    for (int x = static_cast<int>(i); x >= 0; x = next[x]) g.chain[i].push_back(x);
  }
  return g;
}

// ------------------------------------------------------------- wtintersect

bool Herzig::admissible_pair(const TameParam& rho, const TameParam& tau, AdmSide side) const {
  const ExtAffineElt r = present(rho, datum().n() - 1, "admissibility");
  const ExtAffineElt t = present(tau, datum().n(), "admissibility");
  for (const auto& y : dl_.lowest_alcove_presentations({t})) {
    for (const auto& a : dl_.adm_eta_sorted()) {
      const ExtAffineElt x = side == AdmSide::right ? y.elt * a : a * y.elt;
      if (dl_.dl_equal({x}, {r})) return true;
    }
  }
  return false;
}

EquivalenceReport Herzig::equivalence_report(const TameParam& rho, const TameParam& tau) const {
  EquivalenceReport rep;
  rep.adm = admissible_pair(rho, tau);
  rep.adm_left = admissible_pair(rho, tau, AdmSide::left);
  const ExtAffineElt t = present(tau, datum().n(), "admissibility");
  const auto jh = dl_.jh_set({t});
  const auto w = wset(rho);
  const auto wo = wobv(rho);
  for (const auto& sigma : jh) {
    rep.jh_wset = rep.jh_wset || w.contains(sigma);
    rep.jh_wobv = rep.jh_wobv || wo.contains(sigma);
  }
  for (const auto& o : dl_.jh_outer({t})) rep.outer_wset = rep.outer_wset || w.contains(o.sigma);
  return rep;
}

}  // namespace alcove
