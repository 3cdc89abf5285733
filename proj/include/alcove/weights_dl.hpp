#pragma once

// Serre weights through lowest alcove presentations, and the combinatorics of
// Deligne-Lusztig presentations R(t_mu s): orbit of presentations, genericity,
// Jordan-Holder sets, outer factors and the covering order.
//
// Nothing here builds a representation. JH sets are defined by the
// combinatorial criterion and are only computed where that criterion holds
// (mu - eta h_eta-deep in C0); otherwise the call refuses.

#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "alcove/affine_weyl.hpp"

namespace alcove {

// F(lambda) for lambda in X_1(T), stored in the canonical form modulo
// (p - pi)X^0: simple-root differences kept, last entries (r, 0, ..., 0) with
// 0 <= r < p^f - 1.
class SerreWeight {
 public:
  SerreWeight() = default;
  // Throws InvalidInput when lambda is not p-restricted.
  static SerreWeight make(const RootDatum& datum, const WeightVec& lambda);

  const WeightVec& lambda() const { return lambda_; }
  friend bool operator==(const SerreWeight&, const SerreWeight&) = default;
  friend auto operator<=>(const SerreWeight&, const SerreWeight&) = default;
  std::string to_string() const { return lambda_.to_string(); }

 private:
  explicit SerreWeight(WeightVec l) : lambda_(std::move(l)) {}
  WeightVec lambda_;
};

struct SerreWeightHash {
  size_t operator()(const SerreWeight& s) const { return WeightVecHash{}(s.lambda()); }
};

// (w~, omega): w~ in W~_1, omega - eta in C0, naming F(pi^-1(w~) . (omega - eta)).
struct SerrePresentation {
  ExtAffineElt w;
  WeightVec omega;
  friend bool operator==(const SerrePresentation&, const SerrePresentation&) = default;
  friend auto operator<=>(const SerrePresentation&, const SerrePresentation&) = default;
};

// R(t_mu s) = R_s(mu).
struct DLPresentation {
  ExtAffineElt elt;
  const WeightVec& mu() const { return elt.trans(); }
  const FiniteWeylElt& s() const { return elt.fin(); }
  friend bool operator==(const DLPresentation&, const DLPresentation&) = default;
  friend auto operator<=>(const DLPresentation&, const DLPresentation&) = default;
  std::string to_string() const { return elt.to_string(); }
};

struct OuterFactor {
  FiniteWeylElt w;
  SerreWeight sigma;
  SerrePresentation presentation;
};

class WeightsDL {
 public:
  explicit WeightsDL(RootDatum datum);

  const AffineWeyl& group() const { return G_; }
  const RootDatum& datum() const { return G_.datum(); }

  // Canonical form of a weight modulo (p - pi)X^0 (differences kept).
  WeightVec reduce_center(const WeightVec& lambda) const;

  // --- Serre weights
  SerreWeight serre_weight(const SerrePresentation& pres) const;
  bool is_valid_presentation(const SerrePresentation& pres) const;
  // One presentation per element of Omega / X^0, with canonical w~; empty when
  // sigma is not 0-deep.
  std::vector<SerrePresentation> presentations_of(const SerreWeight& sigma) const;
  // x with lambda in x . C0, lambda = x . nu. Throws when sigma is on a p-wall.
  ExtAffineElt alcove_element(const SerreWeight& sigma) const;
  // Largest m with sigma m-deep, -1 when sigma is not 0-deep.
  int64_t depth(const SerreWeight& sigma) const;
  int64_t d_sigma(const SerreWeight& sigma) const;
  // F(lambda) -> F(w~_h . lambda), on p-regular weights.
  SerreWeight reflect(const SerreWeight& sigma) const;
  // The presentation (w~, omega + z) equivalent to (t_z w~, omega), with z
  // chosen so that the translation of w~ is canonical.
  SerrePresentation normalize(const SerrePresentation& pres) const;

  // --- Deligne-Lusztig presentations
  // R1 ~ R2 iff s2 = c s1 pi(c)^-1 and mu2 = c(mu1) + p k - s2 pi(k) for some c in W, k in X*(T).
  bool dl_equal(const DLPresentation& a, const DLPresentation& b) const;
  // Every presentation (s', nu) of R with nu - eta in C0, one per class modulo
  // (p - pi)X^0, sorted.
  std::vector<DLPresentation> lowest_alcove_presentations(const DLPresentation& r) const;
  // Largest m such that R is m-generic, -1 when R is not 0-generic.
  int64_t genericity(const DLPresentation& r) const;
  // The lowest alcove presentation of greatest depth (ties broken by order).
  std::optional<DLPresentation> deepest_presentation(const DLPresentation& r) const;
  // Shift r by (p - pi)c, c in X^0, so that det(mu) equals target. Empty when
  // no such c exists.
  std::optional<DLPresentation> with_det(const DLPresentation& r, const std::vector<int64_t>& target) const;

  // --- Jordan-Holder sets (need mu - eta h_eta-deep in C0, else PreconditionError)
  // Through t_omega W~_{<= w0 w~} in t_mu s Adm(eta).
  std::set<SerreWeight> jh_set(const DLPresentation& r) const;
  // Through u up w~_h w~ and t_omega in t_mu s u^-1 W.
  std::set<SerreWeight> jh_set_uparrow(const DLPresentation& r) const;
  // Presentations witnessing jh_set membership, sorted.
  std::vector<SerrePresentation> jh_presentations(const DLPresentation& r) const;
  std::vector<OuterFactor> jh_outer(const DLPresentation& r) const;
  bool is_outer(const SerreWeight& sigma, const DLPresentation& r) const;
  // R_u = R(t_{nu_u} u), nu_u = omega - u (w~_h w~)^-1(0), for u in W, built
  // on the given presentation (w~, omega) of sigma.
  std::vector<DLPresentation> outer_family(const SerrePresentation& pres) const;
  // Needs kappa (h_eta + d_kappa)-deep.
  bool covers(const SerreWeight& kappa, const SerreWeight& sigma) const;

  // --- shared enumeration data
  const std::unordered_set<ExtAffineElt, ExtAffineEltHash>& adm_eta() const { return adm_eta_; }
  const std::vector<ExtAffineElt>& adm_eta_sorted() const { return adm_sorted_; }
  // W~_{<= w0 w~} for the canonical restricted elements, same order as
  // group().restricted_elements().
  const std::vector<ExtAffineElt>& lower_interval_w0(size_t idx) const { return w0_intervals_[idx]; }
  // Solve (p - w pi) k = b in X*(T).
  std::optional<WeightVec> solve_p_minus_wpi(const FiniteWeylElt& w, const WeightVec& b) const;
  void require_deep(const DLPresentation& r, int64_t m, const std::string& what) const;

 private:
  AffineWeyl G_;
  std::unordered_set<ExtAffineElt, ExtAffineEltHash> adm_eta_;
  std::vector<ExtAffineElt> adm_sorted_;
  std::vector<std::vector<ExtAffineElt>> w0_intervals_;
};

}  // namespace alcove
