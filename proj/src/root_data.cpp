#include "alcove/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t pos_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- WeightVec

WeightVec::WeightVec(int n, int f) : n_(n), f_(f), v_(static_cast<size_t>(n * f), 0) {}

WeightVec::WeightVec(int n, int f, std::vector<int64_t> entries) : n_(n), f_(f), v_(std::move(entries)) {
  if (v_.size() != static_cast<size_t>(n * f)) throw InvalidInput("weight has wrong number of entries");
}

WeightVec WeightVec::from_rows(const std::vector<std::vector<int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("weight must have at least one non-empty row");
  const int n = static_cast<int>(rows.front().size());
  std::vector<int64_t> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw InvalidInput("weight rows differ in length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return WeightVec(n, static_cast<int>(rows.size()), std::move(flat));
}

std::vector<std::vector<int64_t>> WeightVec::rows() const {
  std::vector<std::vector<int64_t>> out(static_cast<size_t>(f_));
  for (int j = 0; j < f_; ++j) out[j].assign(v_.begin() + j * n_, v_.begin() + (j + 1) * n_);
  return out;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (o.n_ != n_ || o.f_ != f_) throw InvalidInput("weight shape mismatch");
  for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (o.n_ != n_ || o.f_ != f_) throw InvalidInput("weight shape mismatch");
  for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

WeightVec WeightVec::operator-() const {
  WeightVec r = *this;
  for (auto& x : r.v_) x = -x;
  return r;
}

WeightVec operator*(int64_t c, WeightVec a) {
  for (auto& x : a.v_) x *= c;
  return a;
}

bool WeightVec::is_central() const {
  for (int j = 0; j < f_; ++j) {
    for (int i = 1; i < n_; ++i) {
      if ((*this)(j, i) != (*this)(j, 0)) return false;
    }
  }
  return true;
}

std::vector<int64_t> WeightVec::det() const {
  std::vector<int64_t> d(static_cast<size_t>(f_), 0);
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) d[j] += (*this)(j, i);
  }
  return d;
}

std::string WeightVec::to_string() const {
  std::ostringstream os;
  for (int j = 0; j < f_; ++j) {
    if (j) os << ';';
    for (int i = 0; i < n_; ++i) {
      if (i) os << ',';
      os << (*this)(j, i);
    }
  }
  return os.str();
}

size_t WeightVecHash::operator()(const WeightVec& v) const {
  size_t h = 0xcbf29ce484222325ULL;
  for (int64_t x : v.raw()) h = (h ^ static_cast<size_t>(x)) * 0x100000001b3ULL;
  return h;
}

// ------------------------------------------------------------ FiniteWeylElt

FiniteWeylElt FiniteWeylElt::identity(int n, int f) {
  std::vector<int8_t> perm(static_cast<size_t>(n * f));
  for (int j = 0; j < f; ++j) {
    for (int i = 0; i < n; ++i) perm[j * n + i] = static_cast<int8_t>(i);
  }
  return FiniteWeylElt(n, f, std::move(perm));
}

FiniteWeylElt FiniteWeylElt::from_one_line(const std::vector<std::vector<int>>& words) {
  if (words.empty() || words.front().empty()) throw InvalidInput("permutation must have at least one non-empty word");
  const int n = static_cast<int>(words.front().size());
  if (n > 100) throw InvalidInput("permutation too long");
  std::vector<int8_t> perm;
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != n) throw InvalidInput("permutation words differ in length");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int x : w) {
      if (x < 1 || x > n || seen[x - 1]) throw InvalidInput("not a permutation of 1..n");
      seen[x - 1] = true;
      perm.push_back(static_cast<int8_t>(x - 1));
    }
  }
  return FiniteWeylElt(n, static_cast<int>(words.size()), std::move(perm));
}

FiniteWeylElt FiniteWeylElt::operator*(const FiniteWeylElt& o) const {
  if (o.n_ != n_ || o.f_ != f_) throw InvalidInput("Weyl element shape mismatch");
  std::vector<int8_t> r(perm_.size());
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) r[j * n_ + i] = perm_[j * n_ + o(j, i)];
  }
  return FiniteWeylElt(n_, f_, std::move(r));
}

FiniteWeylElt FiniteWeylElt::inverse() const {
  std::vector<int8_t> r(perm_.size());
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) r[j * n_ + (*this)(j, i)] = static_cast<int8_t>(i);
  }
  return FiniteWeylElt(n_, f_, std::move(r));
}

WeightVec FiniteWeylElt::act(const WeightVec& lambda) const {
  if (lambda.rank() != n_ || lambda.embeddings() != f_) throw InvalidInput("weight/Weyl shape mismatch");
  WeightVec r(n_, f_);
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) r(j, (*this)(j, i)) = lambda(j, i);
  }
  return r;
}

int FiniteWeylElt::length() const {
  int l = 0;
  for (int j = 0; j < f_; ++j) {
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) l += (*this)(j, a) > (*this)(j, b) ? 1 : 0;
    }
  }
  return l;
}

bool FiniteWeylElt::is_identity() const {
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) {
      if ((*this)(j, i) != i) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> FiniteWeylElt::one_line() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(f_));
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) out[j].push_back((*this)(j, i) + 1);
  }
  return out;
}

std::string FiniteWeylElt::to_string() const {
  std::ostringstream os;
  for (int j = 0; j < f_; ++j) {
    if (j) os << ';';
    for (int i = 0; i < n_; ++i) os << (*this)(j, i) + 1;
  }
  return os.str();
}

std::string Root::label() const {
  std::ostringstream os;
  os << "e" << i + 1 << "-e" << k + 1 << "@" << j;
  return os.str();
}

// ---------------------------------------------------------------- RootDatum

RootDatum::RootDatum(int n, int f, int64_t p) : n_(n), f_(f), p_(p) {
  if (n < 2) throw InvalidInput("rank n must be at least 2");
  if (f < 1) throw InvalidInput("number of embeddings f must be at least 1");
  if (n > 8 || f > 6) throw InvalidInput("rank or embedding count outside supported range");
  if (p <= n - 1) throw PreconditionError("C0 empty", "need p > h_eta = n-1");
  if (!is_prime(p)) throw PreconditionError("p not prime", std::to_string(p));

  eta_ = WeightVec(n, f);
  for (int j = 0; j < f; ++j) {
    for (int i = 0; i < n; ++i) eta_(j, i) = n - 1 - i;
  }
  for (int j = 0; j < f; ++j) {
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) positive_.push_back({j, i, k});
    }
    for (int i = 0; i + 1 < n; ++i) simple_.push_back({j, i, i + 1});
  }

  __int128 m = 1;
  for (int j = 0; j < f; ++j) {
    m *= p;
    if (m > (static_cast<__int128>(1) << 62)) throw InvalidInput("p^f too large");
  }
  center_modulus_ = static_cast<uint64_t>(m - 1);

  // W = S_n^f, lexicographic in the flattened one-line words.
  std::vector<std::vector<int>> per;
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  do {
    per.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  std::vector<size_t> idx(static_cast<size_t>(f), 0);
  while (true) {
    std::vector<std::vector<int>> words;
    for (int j = 0; j < f; ++j) words.push_back(per[idx[j]]);
    weyl_.push_back(FiniteWeylElt::from_one_line(words));
    int j = f - 1;
    while (j >= 0 && ++idx[j] == per.size()) idx[j--] = 0;
    if (j < 0) break;
  }
}

WeightVec RootDatum::fundamental_weight(const Root& simple) const {
  check_root(simple);
  if (!simple.is_simple()) throw InvalidInput("fundamental weight needs a simple root");
  WeightVec w(n_, f_);
  for (int i = 0; i <= simple.i; ++i) w(simple.j, i) = 1;
  return w;
}

WeightVec RootDatum::constant(int j, int64_t c) const {
  WeightVec w(n_, f_);
  for (int i = 0; i < n_; ++i) w(j, i) = c;
  return w;
}

std::vector<Root> RootDatum::all_roots() const {
  std::vector<Root> r;
  for (const auto& b : positive_) {
    r.push_back(b);
    r.push_back(b.negated());
  }
  return r;
}

void RootDatum::check_root(const Root& r) const {
  if (r.j < 0 || r.j >= f_ || r.i < 0 || r.i >= n_ || r.k < 0 || r.k >= n_ || r.i == r.k) {
    throw InvalidInput("root out of range: " + r.label());
  }
}

int64_t RootDatum::cartan(const Root& alpha, const Root& beta) const {
  // <alpha, beta^vee> with alpha = e_a - e_b, beta^vee = e_c - e_d.
  if (alpha.j != beta.j) return 0;
  auto coeff = [&](int idx) { return (idx == alpha.i ? 1 : 0) - (idx == alpha.k ? 1 : 0); };
  return coeff(beta.i) - coeff(beta.k);
}

FiniteWeylElt RootDatum::w0() const {
  std::vector<std::vector<int>> words(static_cast<size_t>(f_));
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) words[j].push_back(n_ - i);
  }
  return FiniteWeylElt::from_one_line(words);
}

FiniteWeylElt RootDatum::reflection(const Root& r) const {
  check_root(r);
  auto words = identity().one_line();
  std::swap(words[r.j][r.i], words[r.j][r.k]);
  return FiniteWeylElt::from_one_line(words);
}

Root RootDatum::act(const FiniteWeylElt& w, const Root& r) const {
  return {r.j, w(r.j, r.i), w(r.j, r.k)};
}

int64_t RootDatum::pairing(const WeightVec& lambda, const Root& beta) const {
  check_root(beta);
  if (lambda.rank() != n_ || lambda.embeddings() != f_) throw InvalidInput("weight shape does not match datum");
  return lambda(beta.j, beta.i) - lambda(beta.j, beta.k);
}

int64_t RootDatum::h_value(const WeightVec& nu) const {
  int64_t h = 0;
  for (const auto& b : positive_) h = std::max(h, std::abs(pairing(nu, b)));
  return h;
}

bool RootDatum::is_dominant(const WeightVec& lambda) const {
  return std::all_of(simple_.begin(), simple_.end(), [&](const Root& a) { return pairing(lambda, a) >= 0; });
}

bool RootDatum::is_restricted(const WeightVec& lambda) const {
  return std::all_of(simple_.begin(), simple_.end(), [&](const Root& a) {
    const int64_t v = pairing(lambda, a);
    return v >= 0 && v <= p_ - 1;
  });
}

WeightVec RootDatum::frobenius_pi(const WeightVec& lambda) const {
  WeightVec r(n_, f_);
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) r((j + 1) % f_, i) = lambda(j, i);
  }
  return r;
}

WeightVec RootDatum::frobenius_pi_inv(const WeightVec& lambda) const {
  WeightVec r(n_, f_);
  for (int j = 0; j < f_; ++j) {
    for (int i = 0; i < n_; ++i) r(j, i) = lambda((j + 1) % f_, i);
  }
  return r;
}

FiniteWeylElt RootDatum::frobenius_pi(const FiniteWeylElt& w) const {
  auto words = w.one_line();
  std::vector<std::vector<int>> r(words.size());
  for (int j = 0; j < f_; ++j) r[(j + 1) % f_] = words[j];
  return FiniteWeylElt::from_one_line(r);
}

FiniteWeylElt RootDatum::frobenius_pi_inv(const FiniteWeylElt& w) const {
  auto words = w.one_line();
  std::vector<std::vector<int>> r(words.size());
  for (int j = 0; j < f_; ++j) r[j] = words[(j + 1) % f_];
  return FiniteWeylElt::from_one_line(r);
}

int64_t RootDatum::wall_distance(const WeightVec& lambda) const {
  const WeightVec shifted = lambda + eta_;
  int64_t best = p_;
  for (const auto& b : positive_) {
    const int64_t r = pos_mod(pairing(shifted, b), p_);
    best = std::min({best, r, p_ - r});
  }
  return best;
}

std::vector<int64_t> RootDatum::alcove_of(const WeightVec& lambda) const {
  const WeightVec shifted = lambda + eta_;
  std::vector<int64_t> sig;
  sig.reserve(positive_.size());
  for (const auto& b : positive_) sig.push_back(floor_div(pairing(shifted, b), p_));
  return sig;
}

bool RootDatum::in_lowest_alcove(const WeightVec& lambda) const {
  const WeightVec shifted = lambda + eta_;
  return std::all_of(positive_.begin(), positive_.end(), [&](const Root& b) {
    const int64_t v = pairing(shifted, b);
    return v > 0 && v < p_;
  });
}

int64_t RootDatum::lowest_alcove_depth(const WeightVec& lambda) const {
  if (!in_lowest_alcove(lambda)) return -1;
  return depth(lambda);
}

int64_t RootDatum::center_residue(const WeightVec& lambda) const {
  const auto m = static_cast<__int128>(center_modulus_);
  if (m == 0) return 0;
  __int128 acc = 0;
  __int128 pk = 1;
  for (int j = 0; j < f_; ++j) {
    __int128 d = lambda(j, n_ - 1) % m;
    acc = (acc + d * pk) % m;
    pk = (pk * p_) % m;
  }
  if (acc < 0) acc += m;
  return static_cast<int64_t>(acc);
}

bool RootDatum::solve_p_minus_pi(const std::vector<int64_t>& target, std::vector<int64_t>& c) const {
  // ((p - pi)c)_j = p c_j - c_{j-1}; one Frobenius cycle of length f.
  const __int128 p = p_;
  __int128 pf = 1;
  for (int j = 0; j < f_; ++j) pf *= p;
  // p^f c_0 = sum_k p^{f-1-k} target_{-k} + c_0
  __int128 num = 0;
  for (int k = 0; k < f_; ++k) num = num * p + target[static_cast<size_t>(((-k) % f_ + f_) % f_)];
  if (num % (pf - 1) != 0) return false;
  c.assign(static_cast<size_t>(f_), 0);
  c[0] = static_cast<int64_t>(num / (pf - 1));
  for (int j = 1; j < f_; ++j) {
    const __int128 t = static_cast<__int128>(target[j]) + c[j - 1];
    if (t % p != 0) return false;
    c[j] = static_cast<int64_t>(t / p);
  }
  // closing the cycle
  return p * c[0] - c[static_cast<size_t>(f_ - 1)] == target[0];
}

}  // namespace alcove
