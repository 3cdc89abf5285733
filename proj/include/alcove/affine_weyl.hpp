#pragma once

// The extended affine Weyl group W~ = X*(T) x| W of the root datum, with the
// alcove geometry it acts on.
//
// t_lambda w acts on X*(T) (x) R by x -> lambda + w(x). Every alcove predicate
// is evaluated exactly: points are kept as integer numerators over a fixed
// denominator, never as floating point.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcove/root_data.hpp"

namespace alcove {

class ExtAffineElt {
 public:
  ExtAffineElt() = default;
  ExtAffineElt(WeightVec trans, FiniteWeylElt fin);
  static ExtAffineElt translation(const WeightVec& lambda);
  static ExtAffineElt finite(const FiniteWeylElt& w);
  static ExtAffineElt identity(int n, int f);

  const WeightVec& trans() const { return trans_; }
  const FiniteWeylElt& fin() const { return fin_; }

  // (t_l w)(t_m v) = t_{l + w(m)} wv
  ExtAffineElt operator*(const ExtAffineElt& o) const;
  ExtAffineElt inverse() const;
  // Affine action on a point of X*(T) (x) R; `den` is the common denominator
  // of `num`, so the point is num/den.
  WeightVec apply(const WeightVec& num, int64_t den) const;
  // Value at 0, i.e. the translation part.
  const WeightVec& at_zero() const { return trans_; }

  friend bool operator==(const ExtAffineElt&, const ExtAffineElt&) = default;
  friend auto operator<=>(const ExtAffineElt&, const ExtAffineElt&) = default;

  std::string to_string() const;

 private:
  WeightVec trans_;
  FiniteWeylElt fin_;
};

struct ExtAffineEltHash {
  size_t operator()(const ExtAffineElt& e) const;
};

// An affine hyperplane <x, beta^vee> = level with beta positive.
struct Wall {
  Root root;
  int64_t level = 0;
  friend bool operator==(const Wall&, const Wall&) = default;
  friend auto operator<=>(const Wall&, const Wall&) = default;
};

// Walls crossed, in order, walking from A0 to w(A0).
struct Gallery {
  std::vector<Wall> walls;
  bool crosses_some_wall_twice() const;
};

// Coxeter generators of W_a: s0 (reflection in <x, alpha_0^vee> = 1) and the
// finite simple reflections s1..s_{n-1}, one set per embedding.
struct Generator {
  int embedding = 0;
  int index = 0;  // 0 for the affine generator, i for alpha_i = e_i - e_{i+1}
  std::string label() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// w = s_{g1} ... s_{gk} * omega with omega of length zero.
struct ReducedWord {
  std::vector<Generator> letters;
  ExtAffineElt omega;
  // Ω part as exponents of the generator u_j per embedding, with the X^0
  // translation that remains after removing them.
  std::vector<int64_t> omega_exponents;
  std::vector<std::string> labels() const;
};

// w = wa * delta with wa in W_a and delta in Ω.
struct OmegaDecomp {
  ExtAffineElt wa;
  ExtAffineElt delta;
};

class AffineWeyl {
 public:
  explicit AffineWeyl(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  int n() const { return datum_.n(); }
  int f() const { return datum_.f(); }
  int64_t p() const { return datum_.p(); }

  ExtAffineElt identity() const { return ExtAffineElt::identity(n(), f()); }
  ExtAffineElt translation(const WeightVec& lambda) const { return ExtAffineElt::translation(lambda); }
  ExtAffineElt finite(const FiniteWeylElt& w) const { return ExtAffineElt::finite(w); }
  ExtAffineElt w0() const { return finite(datum_.w0()); }
  // w~_h = w0 t_{-eta}
  ExtAffineElt w_h() const;
  ExtAffineElt simple_reflection(const Root& alpha) const { return finite(datum_.reflection(alpha)); }
  ExtAffineElt generator(const Generator& g) const;
  const std::vector<Generator>& generators() const { return generators_; }
  // The length-zero element u_j = t_{e_1} (cycle) of embedding j.
  ExtAffineElt omega_generator(int j) const;
  ExtAffineElt frobenius_pi(const ExtAffineElt& w) const;
  ExtAffineElt frobenius_pi_inv(const ExtAffineElt& w) const;

  // --- alcove geometry
  // Fixed interior point c of A0 with <c, alpha^vee> = ht(alpha)/D, D = n f + 1.
  int64_t sample_denominator() const { return sample_den_; }
  // Numerators (over sample_denominator()) of w(c).
  WeightVec sample_image(const ExtAffineElt& w) const;
  // floor(<w(c), beta^vee>) for each positive root: the alcove w(A0).
  std::vector<int64_t> alcove_signature(const ExtAffineElt& w) const;
  // Translation part of w modulo ZR, i.e. the Ω-component, as per-embedding sums.
  std::vector<int64_t> omega_component(const ExtAffineElt& w) const { return w.trans().det(); }

  // --- length
  // Number of affine root hyperplanes separating A0 and w(A0).
  int64_t length(const ExtAffineElt& w) const;
  // Closed form sum_{b>0, w^-1 b>0} |<l,b>| + sum_{b>0, w^-1 b<0} |<l,b> - 1| for w = t_l w.
  int64_t length_closed_form(const ExtAffineElt& w) const;
  bool is_left_descent(const Generator& g, const ExtAffineElt& w) const;
  ReducedWord reduced_word(const ExtAffineElt& w) const;
  ExtAffineElt replay(const ReducedWord& word) const;
  Gallery minimal_gallery(const ExtAffineElt& w) const;
  OmegaDecomp omega_decompose(const ExtAffineElt& w) const;
  bool is_in_omega(const ExtAffineElt& w) const { return length_closed_form(w) == 0; }
  bool is_in_affine_weyl(const ExtAffineElt& w) const;

  // --- W~^+ and W~_1
  bool is_dominant_elt(const ExtAffineElt& w) const;
  bool is_restricted_elt(const ExtAffineElt& w) const;
  // The element of X*(T) w ∩ W~_1 whose translation part has last entry 0 in
  // every embedding.
  ExtAffineElt diamond(const ExtAffineElt& w) const;
  // Representative of w X^0 with last translation entry 0 in every embedding.
  ExtAffineElt center_normalized(const ExtAffineElt& w) const;
  // Canonical W~_1 representatives, one per element of W (in weyl_group() order).
  const std::vector<ExtAffineElt>& restricted_elements() const { return restricted_; }
  // Representatives of Ω / X^0: products of powers u_j^{k_j}, 0 <= k_j < n.
  const std::vector<ExtAffineElt>& omega_representatives() const { return omega_reps_; }
  // The element mapping A0 onto the alcove containing num/den (must be regular).
  ExtAffineElt element_of_alcove(const WeightVec& num, int64_t den) const;

  // --- orders
  bool bruhat_leq(const ExtAffineElt& u, const ExtAffineElt& w) const;
  // All u <= w. Throws BudgetError when length(w) exceeds max_length.
  std::vector<ExtAffineElt> bruhat_interval(const ExtAffineElt& w, int64_t max_length = 18) const;
  bool adm_contains(const WeightVec& lambda, const ExtAffineElt& w) const;
  std::vector<ExtAffineElt> adm_set(const WeightVec& lambda) const;
  // The up-order. `box` bounds the absolute value of the translation entries of
  // every element the chain search visits; leaving it raises InconclusiveError.
  bool up_leq(const ExtAffineElt& u, const ExtAffineElt& w, int64_t box = 64) const;
  // Chain search only, no Bruhat fast path.
  bool up_leq_by_chain(const ExtAffineElt& u, const ExtAffineElt& w, int64_t box = 64) const;
  // Every dominant u with u up-below w (w dominant), found by descending
  // reflection chains.
  std::vector<ExtAffineElt> up_lower_dominant(const ExtAffineElt& w, int64_t box = 64) const;

  // --- p-dot action: (t_nu w).lambda = p nu + w(lambda + eta) - eta
  WeightVec p_dot(const ExtAffineElt& w, const WeightVec& lambda) const;

  // Affine reflection t_{m beta} s_beta, i.e. reflection in <x, beta^vee> = m.
  ExtAffineElt affine_reflection(const Root& beta, int64_t m) const;

 private:
  // Whether num/den lies in the cone sum_{alpha simple} R>=0 alpha (per
  // embedding, partial sums non-negative, totals zero).
  bool in_positive_cone(const WeightVec& diff) const;
  void check_shape(const ExtAffineElt& w) const;

  RootDatum datum_;
  int64_t sample_den_;
  WeightVec sample_num_;
  std::vector<Generator> generators_;
  std::vector<ExtAffineElt> restricted_;
  std::vector<ExtAffineElt> omega_reps_;
};

}  // namespace alcove
