#pragma once

// Tame inertial parameters as (s, mu) data, Herzig's set W?, obvious weights,
// weight elimination certificates and the connecting-type graph.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcove/weights_dl.hpp"

namespace alcove {

// w~(taubar) = t_mu s. Presentations related by the same orbit formula as
// Deligne-Lusztig presentations name the same parameter.
struct TameParam {
  ExtAffineElt elt;
  DLPresentation as_dl() const { return {elt}; }
  std::string to_string() const { return elt.to_string(); }
};

struct EliminationCertificate {
  SerreWeight sigma;
  ExtAffineElt tau;  // the presentation of taubar the certificate is about
  SerrePresentation presentation;
  FiniteWeylElt u;
  DLPresentation R;
  // Lowest alcove presentations of R modulo (p - pi)X^0, each with the unique
  // shift whose Omega-component could place tau in t_nu s Adm(eta) (if any).
  std::vector<DLPresentation> lowest;
  std::vector<std::optional<DLPresentation>> det_matched;
};

struct ConnectionEdge {
  SerreWeight sigma;   // outer weight for w0 w2
  SerreWeight sigma2;  // outer weight for w0 s_alpha w2
  DLPresentation R;
  Root alpha;
  ExtAffineElt w1;
  ExtAffineElt w2;
};

struct ConnectivityGraph {
  std::vector<SerreWeight> vertices;
  std::vector<ConnectionEdge> edges;
  std::vector<bool> extremal;
  std::vector<int> component;
  // Hops to the nearest extremal vertex (-1 when unreachable) and the vertex
  // path realising it.
  std::vector<int> distance;
  std::vector<std::vector<int>> chain;
  // Edges whose endpoints are not both in W? (a failure of the obvious weight
  // statement if ever non-zero).
  int stray_edges = 0;
  bool connected() const;
  bool all_reach_extremal() const;
};

struct EquivalenceReport {
  bool adm = false;         // w~(rhobar) in w~(tau) Adm(eta) for some presentations
  bool jh_wset = false;     // JH(R(t_mu s)) meets W?(rhobar)
  bool jh_wobv = false;     // JH(R(t_mu s)) meets W_obv(rhobar)
  bool outer_wset = false;  // JH_out(R(t_mu s)) meets W?(rhobar)
  // Adm(eta) on the left instead; reported only, it is not one of the agreeing conditions.
  bool adm_left = false;
  bool agree() const { return adm == jh_wset && jh_wset == jh_wobv && jh_wobv == outer_wset; }
};

class Herzig {
 public:
  explicit Herzig(RootDatum datum);

  const WeightsDL& dl() const { return dl_; }
  const AffineWeyl& group() const { return dl_.group(); }
  const RootDatum& datum() const { return dl_.datum(); }

  int64_t genericity(const TameParam& tau) const { return dl_.genericity(tau.as_dl()); }
  // The stored presentation when it is m-deep, otherwise the deepest lowest
  // alcove presentation in its orbit; PreconditionError when none is m-deep.
  ExtAffineElt present(const TameParam& tau, int64_t m, const std::string& what) const;

  std::set<SerreWeight> wset(const TameParam& tau) const;
  std::set<SerreWeight> wset_by_definition(const TameParam& tau) const;
  // Characterization witnesses (w~, omega) with tau in t_omega W~_{<= w0 w~}.
  std::vector<SerrePresentation> wset_presentations(const TameParam& tau) const;
  std::set<SerreWeight> wobv(const TameParam& tau) const;
  bool is_extremal(const SerreWeight& sigma, const TameParam& tau) const;

  EliminationCertificate eliminate(const SerreWeight& sigma, const TameParam& tau) const;
  // Re-derives every field of the certificate that can be derived and re-checks
  // both conditions. Returns an empty string on success, a reason otherwise.
  std::string replay(const EliminationCertificate& cert) const;

  // The outer factor of R corresponding to v in W.
  SerreWeight outer_weight(const DLPresentation& r, const FiniteWeylElt& v) const;
  // Every factorization found for the stored (h_eta-deep) presentation.
  std::vector<ConnectionEdge> connections(const TameParam& tau) const;
  std::optional<ConnectionEdge> connect(const SerreWeight& a, const SerreWeight& b, const TameParam& tau) const;
  std::string validate_edge(const ConnectionEdge& e, const TameParam& tau) const;
  ConnectivityGraph connectivity_graph(const TameParam& tau) const;

  // Left: w~(rhobar) in Adm(eta) w~(tau). Right: w~(rhobar) in w~(tau) Adm(eta),
  // the form that matches the JH and W? criteria.
  enum class AdmSide { left, right };
  bool admissible_pair(const TameParam& rho, const TameParam& tau, AdmSide side = AdmSide::right) const;
  EquivalenceReport equivalence_report(const TameParam& rho, const TameParam& tau) const;

 private:
  WeightsDL dl_;
};

}  // namespace alcove
