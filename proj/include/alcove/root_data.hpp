#pragma once

// Root datum of Res_{O/Z_p} GL_n over f unramified embeddings.
//
// X*(T) is Z^{n f}: one integer n-vector per embedding. Roots are e_i - e_k
// inside a single embedding, positive when i < k. The Frobenius twist pi is
// the forward cyclic shift of embeddings (component j moves to j+1 mod f).

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace alcove {

class WeightVec {
 public:
  WeightVec() = default;
  WeightVec(int n, int f);
  WeightVec(int n, int f, std::vector<int64_t> entries);
  static WeightVec from_rows(const std::vector<std::vector<int64_t>>& rows);

  int rank() const { return n_; }
  int embeddings() const { return f_; }

  int64_t operator()(int j, int i) const { return v_[static_cast<size_t>(j * n_ + i)]; }
  int64_t& operator()(int j, int i) { return v_[static_cast<size_t>(j * n_ + i)]; }
  std::span<const int64_t> raw() const { return v_; }
  std::vector<std::vector<int64_t>> rows() const;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  WeightVec operator-() const;
  friend WeightVec operator*(int64_t c, WeightVec a);

  // Constant within every embedding, i.e. an element of X^0(T).
  bool is_central() const;
  // Per-embedding sum of entries (the determinant character).
  std::vector<int64_t> det() const;

  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend auto operator<=>(const WeightVec&, const WeightVec&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  int f_ = 0;
  std::vector<int64_t> v_;
};

class FiniteWeylElt {
 public:
  FiniteWeylElt() = default;
  static FiniteWeylElt identity(int n, int f);
  // One-line notation, 1-based, one word per embedding.
  static FiniteWeylElt from_one_line(const std::vector<std::vector<int>>& words);

  int rank() const { return n_; }
  int embeddings() const { return f_; }
  // Image of position i (0-based) in embedding j.
  int operator()(int j, int i) const { return perm_[static_cast<size_t>(j * n_ + i)]; }

  FiniteWeylElt operator*(const FiniteWeylElt& o) const;
  FiniteWeylElt inverse() const;
  // (w lambda)_{w(i)} = lambda_i.
  WeightVec act(const WeightVec& lambda) const;
  // Number of inversions summed over embeddings.
  int length() const;
  bool is_identity() const;
  std::vector<std::vector<int>> one_line() const;

  friend bool operator==(const FiniteWeylElt&, const FiniteWeylElt&) = default;
  friend auto operator<=>(const FiniteWeylElt&, const FiniteWeylElt&) = default;

  std::string to_string() const;

 private:
  FiniteWeylElt(int n, int f, std::vector<int8_t> perm) : n_(n), f_(f), perm_(std::move(perm)) {}
  int n_ = 0;
  int f_ = 0;
  std::vector<int8_t> perm_;
};

// e_i - e_k in embedding j.
struct Root {
  int j = 0;
  int i = 0;
  int k = 1;

  bool is_positive() const { return i < k; }
  bool is_simple() const { return k == i + 1; }
  Root negated() const { return {j, k, i}; }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
  std::string label() const;
};

class RootDatum {
 public:
  // Throws PreconditionError when p <= n-1 (C0 empty) or p not prime,
  // InvalidInput when n < 2 or f < 1.
  RootDatum(int n, int f, int64_t p);

  int n() const { return n_; }
  int f() const { return f_; }
  int64_t p() const { return p_; }
  int h_eta() const { return n_ - 1; }

  WeightVec zero() const { return WeightVec(n_, f_); }
  // (n-1, ..., 1, 0) in every embedding.
  const WeightVec& eta() const { return eta_; }
  // omega_alpha for a simple root alpha_i: ones in the first i+1 slots of its
  // embedding. Unique up to X^0; this is the fixed representative.
  WeightVec fundamental_weight(const Root& simple) const;
  WeightVec constant(int j, int64_t c) const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  std::vector<Root> all_roots() const;
  void check_root(const Root& r) const;
  // <alpha, beta^vee>
  int64_t cartan(const Root& alpha, const Root& beta) const;

  FiniteWeylElt identity() const { return FiniteWeylElt::identity(n_, f_); }
  FiniteWeylElt w0() const;
  FiniteWeylElt reflection(const Root& r) const;
  // All of W = S_n^f in a fixed deterministic order.
  const std::vector<FiniteWeylElt>& weyl_group() const { return weyl_; }
  Root act(const FiniteWeylElt& w, const Root& r) const;

  int64_t pairing(const WeightVec& lambda, const Root& beta) const;
  int64_t h_value(const WeightVec& nu) const;
  bool is_dominant(const WeightVec& lambda) const;
  // X_1(T): dominant with <lambda, alpha^vee> <= p-1 on simple roots.
  bool is_restricted(const WeightVec& lambda) const;

  WeightVec frobenius_pi(const WeightVec& lambda) const;
  WeightVec frobenius_pi_inv(const WeightVec& lambda) const;
  FiniteWeylElt frobenius_pi(const FiniteWeylElt& w) const;
  FiniteWeylElt frobenius_pi_inv(const FiniteWeylElt& w) const;

  // min over roots and k of |<lambda+eta, alpha^vee> - k p|.
  int64_t wall_distance(const WeightVec& lambda) const;
  bool is_m_deep(const WeightVec& lambda, int64_t m) const { return wall_distance(lambda) > m; }
  // Largest m with lambda m-deep, or -1 when lambda lies on a p-wall.
  int64_t depth(const WeightVec& lambda) const { return wall_distance(lambda) - 1; }
  bool is_p_regular(const WeightVec& lambda) const { return wall_distance(lambda) > 0; }
  // floor(<lambda+eta, beta^vee> / p) for each positive root, in positive_roots() order.
  std::vector<int64_t> alcove_of(const WeightVec& lambda) const;
  // lambda in C0: 0 < <lambda+eta, beta^vee> < p for every positive root.
  bool in_lowest_alcove(const WeightVec& lambda) const;
  // Largest m with lambda m-deep in C0, -1 when lambda is not in C0.
  int64_t lowest_alcove_depth(const WeightVec& lambda) const;

  // Residue of the X^0-content of lambda modulo (p - pi)X^0; see SerreWeight.
  int64_t center_residue(const WeightVec& lambda) const;
  uint64_t center_modulus() const { return center_modulus_; }
  // Solve (p - pi) c = target over Z^f; false when no integral solution.
  bool solve_p_minus_pi(const std::vector<int64_t>& target, std::vector<int64_t>& c) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.n_ == b.n_ && a.f_ == b.f_ && a.p_ == b.p_;
  }

 private:
  int n_;
  int f_;
  int64_t p_;
  uint64_t center_modulus_;
  WeightVec eta_;
  std::vector<Root> positive_;
  std::vector<Root> simple_;
  std::vector<FiniteWeylElt> weyl_;
};

struct WeightVecHash {
  size_t operator()(const WeightVec& v) const;
};

}  // namespace alcove
