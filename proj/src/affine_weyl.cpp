#include "alcove/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ------------------------------------------------------------- ExtAffineElt

ExtAffineElt::ExtAffineElt(WeightVec trans, FiniteWeylElt fin) : trans_(std::move(trans)), fin_(std::move(fin)) {
  if (trans_.rank() != fin_.rank() || trans_.embeddings() != fin_.embeddings()) {
    throw InvalidInput("translation and finite part have different shapes");
  }
}

ExtAffineElt ExtAffineElt::translation(const WeightVec& lambda) {
  return {lambda, FiniteWeylElt::identity(lambda.rank(), lambda.embeddings())};
}

ExtAffineElt ExtAffineElt::finite(const FiniteWeylElt& w) { return {WeightVec(w.rank(), w.embeddings()), w}; }

ExtAffineElt ExtAffineElt::identity(int n, int f) { return {WeightVec(n, f), FiniteWeylElt::identity(n, f)}; }

ExtAffineElt ExtAffineElt::operator*(const ExtAffineElt& o) const {
  return {trans_ + fin_.act(o.trans_), fin_ * o.fin_};
}

ExtAffineElt ExtAffineElt::inverse() const {
  const FiniteWeylElt wi = fin_.inverse();
  return {-wi.act(trans_), wi};
}

WeightVec ExtAffineElt::apply(const WeightVec& num, int64_t den) const { return den * trans_ + fin_.act(num); }

std::string ExtAffineElt::to_string() const { return "t(" + trans_.to_string() + ")*[" + fin_.to_string() + "]"; }

size_t ExtAffineEltHash::operator()(const ExtAffineElt& e) const {
  size_t h = WeightVecHash{}(e.trans());
  for (int j = 0; j < e.fin().embeddings(); ++j) {
    for (int i = 0; i < e.fin().rank(); ++i) h = (h ^ static_cast<size_t>(e.fin()(j, i) + 7)) * 0x100000001b3ULL;
  }
  return h;
}

bool Gallery::crosses_some_wall_twice() const {
  std::set<Wall> seen;
  for (const auto& w : walls) {
    if (!seen.insert(w).second) return true;
  }
  return false;
}

std::string Generator::label() const { return "s" + std::to_string(index) + "@" + std::to_string(embedding); }

std::vector<std::string> ReducedWord::labels() const {
  std::vector<std::string> out;
  for (const auto& g : letters) out.push_back(g.label());
  for (size_t j = 0; j < omega_exponents.size(); ++j) {
    if (omega_exponents[j] != 0) {
      out.push_back("omega^" + std::to_string(omega_exponents[j]) +
                    (omega_exponents.size() > 1 ? "@" + std::to_string(j) : ""));
    }
  }
  return out;
}

// ---------------------------------------------------------------- AffineWeyl

AffineWeyl::AffineWeyl(RootDatum datum) : datum_(std::move(datum)) {
  sample_den_ = static_cast<int64_t>(n()) * f() + 1;
  sample_num_ = datum_.eta();
  for (int j = 0; j < f(); ++j) {
    for (int i = 0; i < n(); ++i) generators_.push_back({j, i});
  }
  for (const auto& w : datum_.weyl_group()) restricted_.push_back(diamond(finite(w)));

  std::vector<int64_t> k(static_cast<size_t>(f()), 0);
  while (true) {
    ExtAffineElt d = identity();
    for (int j = 0; j < f(); ++j) {
      for (int64_t t = 0; t < k[j]; ++t) d = d * omega_generator(j);
    }
    omega_reps_.push_back(d);
    int j = f() - 1;
    while (j >= 0 && ++k[j] == n()) k[j--] = 0;
    if (j < 0) break;
  }
}

void AffineWeyl::check_shape(const ExtAffineElt& w) const {
  if (w.trans().rank() != n() || w.trans().embeddings() != f()) {
    throw InvalidInput("element shape does not match the root datum");
  }
}

ExtAffineElt AffineWeyl::w_h() const {
  const FiniteWeylElt w0 = datum_.w0();
  return {w0.act(-datum_.eta()), w0};
}

ExtAffineElt AffineWeyl::affine_reflection(const Root& beta, int64_t m) const {
  datum_.check_root(beta);
  WeightVec t(n(), f());
  t(beta.j, beta.i) = m;
  t(beta.j, beta.k) = -m;
  return {t, datum_.reflection(beta)};
}

ExtAffineElt AffineWeyl::generator(const Generator& g) const {
  if (g.embedding < 0 || g.embedding >= f() || g.index < 0 || g.index >= n()) {
    throw InvalidInput("generator out of range: " + g.label());
  }
  if (g.index == 0) return affine_reflection({g.embedding, 0, n() - 1}, 1);
  return simple_reflection({g.embedding, g.index - 1, g.index});
}

ExtAffineElt AffineWeyl::omega_generator(int j) const {
  WeightVec e1(n(), f());
  e1(j, 0) = 1;
  for (const auto& w : datum_.weyl_group()) {
    bool other_trivial = true;
    for (int jj = 0; jj < f() && other_trivial; ++jj) {
      if (jj == j) continue;
      for (int i = 0; i < n(); ++i) other_trivial = other_trivial && w(jj, i) == i;
    }
    if (!other_trivial) continue;
    ExtAffineElt u(e1, w);
    if (length_closed_form(u) == 0) return u;
  }
  throw Error("no length-zero element over t_{e_1}");
}

ExtAffineElt AffineWeyl::frobenius_pi(const ExtAffineElt& w) const {
  return {datum_.frobenius_pi(w.trans()), datum_.frobenius_pi(w.fin())};
}

ExtAffineElt AffineWeyl::frobenius_pi_inv(const ExtAffineElt& w) const {
  return {datum_.frobenius_pi_inv(w.trans()), datum_.frobenius_pi_inv(w.fin())};
}

WeightVec AffineWeyl::sample_image(const ExtAffineElt& w) const {
  check_shape(w);
  return w.apply(sample_num_, sample_den_);
}

std::vector<int64_t> AffineWeyl::alcove_signature(const ExtAffineElt& w) const {
  const WeightVec x = sample_image(w);
  std::vector<int64_t> sig;
  for (const auto& b : datum_.positive_roots()) sig.push_back(floor_div(datum_.pairing(x, b), sample_den_));
  return sig;
}

int64_t AffineWeyl::length(const ExtAffineElt& w) const {
  int64_t l = 0;
  for (int64_t k : alcove_signature(w)) l += std::abs(k);
  return l;
}

int64_t AffineWeyl::length_closed_form(const ExtAffineElt& w) const {
  check_shape(w);
  const FiniteWeylElt wi = w.fin().inverse();
  int64_t l = 0;
  for (const auto& b : datum_.positive_roots()) {
    const int64_t a = datum_.pairing(w.trans(), b);
    const bool stays_positive = wi(b.j, b.i) < wi(b.j, b.k);
    l += stays_positive ? std::abs(a) : std::abs(a - 1);
  }
  return l;
}

bool AffineWeyl::is_left_descent(const Generator& g, const ExtAffineElt& w) const {
  return length_closed_form(generator(g) * w) < length_closed_form(w);
}

ReducedWord AffineWeyl::reduced_word(const ExtAffineElt& w) const {
  ReducedWord out;
  ExtAffineElt cur = w;
  int64_t l = length_closed_form(cur);
  while (l > 0) {
    bool found = false;
    for (const auto& g : generators_) {
      ExtAffineElt next = generator(g) * cur;
      if (length_closed_form(next) < l) {
        out.letters.push_back(g);
        cur = std::move(next);
        --l;
        found = true;
        break;
      }
    }
    if (!found) throw Error("no left descent for element of positive length");
  }
  out.omega = cur;
  out.omega_exponents = cur.trans().det();
  return out;
}

ExtAffineElt AffineWeyl::replay(const ReducedWord& word) const {
  ExtAffineElt cur = identity();
  for (const auto& g : word.letters) cur = cur * generator(g);
  return cur * word.omega;
}

Gallery AffineWeyl::minimal_gallery(const ExtAffineElt& w) const {
  const ReducedWord word = reduced_word(w);
  Gallery g;
  ExtAffineElt cur = identity();
  for (const auto& letter : word.letters) {
    Root beta = letter.index == 0 ? Root{letter.embedding, 0, n() - 1} : Root{letter.embedding, letter.index - 1, letter.index};
    int64_t level = letter.index == 0 ? 1 : 0;
    // cur maps {<y,beta> = level} to {<z, w beta> = level + <trans, w beta>}.
    Root image = datum_.act(cur.fin(), beta);
    int64_t image_level = level + datum_.pairing(cur.trans(), image);
    if (!image.is_positive()) {
      image = image.negated();
      image_level = -image_level;
    }
    g.walls.push_back({image, image_level});
    cur = cur * generator(letter);
  }
  return g;
}

OmegaDecomp AffineWeyl::omega_decompose(const ExtAffineElt& w) const {
  check_shape(w);
  const std::vector<int64_t> d = w.trans().det();
  ExtAffineElt delta = identity();
  for (int j = 0; j < f(); ++j) {
    const ExtAffineElt u = omega_generator(j);
    const ExtAffineElt step = d[j] >= 0 ? u : u.inverse();
    for (int64_t t = 0; t < std::abs(d[j]); ++t) delta = delta * step;
  }
  return {w * delta.inverse(), delta};
}

bool AffineWeyl::is_in_affine_weyl(const ExtAffineElt& w) const {
  const auto d = w.trans().det();
  return std::all_of(d.begin(), d.end(), [](int64_t x) { return x == 0; });
}

bool AffineWeyl::is_dominant_elt(const ExtAffineElt& w) const {
  const WeightVec x = sample_image(w);
  for (const auto& a : datum_.simple_roots()) {
    if (datum_.pairing(x, a) <= 0) return false;
  }
  return true;
}

bool AffineWeyl::is_restricted_elt(const ExtAffineElt& w) const {
  const WeightVec x = sample_image(w);
  for (const auto& a : datum_.simple_roots()) {
    const int64_t v = datum_.pairing(x, a);
    if (v <= 0 || v >= sample_den_) return false;
  }
  return true;
}

ExtAffineElt AffineWeyl::center_normalized(const ExtAffineElt& w) const {
  check_shape(w);
  WeightVec t = w.trans();
  for (int j = 0; j < f(); ++j) {
    const int64_t last = t(j, n() - 1);
    for (int i = 0; i < n(); ++i) t(j, i) -= last;
  }
  return {t, w.fin()};
}

ExtAffineElt AffineWeyl::diamond(const ExtAffineElt& w) const {
  const WeightVec x = sample_image(w);
  // Shift by nu with <nu, alpha_i^vee> = -floor(<x, alpha_i^vee>).
  WeightVec nu(n(), f());
  for (int j = 0; j < f(); ++j) {
    for (int i = n() - 2; i >= 0; --i) {
      const int64_t k = floor_div(datum_.pairing(x, {j, i, i + 1}), sample_den_);
      nu(j, i) = nu(j, i + 1) - k;
    }
  }
  return center_normalized(translation(nu) * w);
}

ExtAffineElt AffineWeyl::element_of_alcove(const WeightVec& num, int64_t den) const {
  WeightVec a(n(), f());
  std::vector<std::vector<int>> words(static_cast<size_t>(f()));
  for (int j = 0; j < f(); ++j) {
    std::vector<std::pair<int64_t, int>> frac;
    for (int i = 0; i < n(); ++i) {
      a(j, i) = floor_div(num(j, i), den);
      frac.push_back({num(j, i) - a(j, i) * den, i});
    }
    std::sort(frac.begin(), frac.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (int i = 0; i + 1 < n(); ++i) {
      if (frac[i].first == frac[i + 1].first) throw InvalidInput("point lies on an affine root hyperplane");
    }
    for (int i = 0; i < n(); ++i) words[j].push_back(frac[i].second + 1);
  }
  return {a, FiniteWeylElt::from_one_line(words)};
}

// ------------------------------------------------------------------ orders

bool AffineWeyl::bruhat_leq(const ExtAffineElt& u_in, const ExtAffineElt& w_in) const {
  check_shape(u_in);
  check_shape(w_in);
  if (omega_component(u_in) != omega_component(w_in)) return false;
  ExtAffineElt u = u_in;
  ExtAffineElt w = w_in;
  int64_t lu = length_closed_form(u);
  int64_t lw = length_closed_form(w);
  // Lifting property: for a left descent s of w,
  //   su < u:  u <= w  iff  su <= sw
  //   su > u:  u <= w  iff  u <= sw
  while (true) {
    if (lu > lw) return false;
    if (lw == 0) return u == w;
    bool stepped = false;
    for (const auto& g : generators_) {
      const ExtAffineElt s = generator(g);
      ExtAffineElt sw = s * w;
      if (length_closed_form(sw) >= lw) continue;
      ExtAffineElt su = s * u;
      if (length_closed_form(su) < lu) {
        u = std::move(su);
        --lu;
      }
      w = std::move(sw);
      --lw;
      stepped = true;
      break;
    }
    if (!stepped) throw Error("no left descent for element of positive length");
  }
}

std::vector<ExtAffineElt> AffineWeyl::bruhat_interval(const ExtAffineElt& w, int64_t max_length) const {
  const int64_t l = length_closed_form(w);
  if (l > max_length) {
    throw BudgetError("Bruhat interval of an element of length " + std::to_string(l) + " exceeds budget " +
                      std::to_string(max_length));
  }
  const ReducedWord word = reduced_word(w);
  std::unordered_set<ExtAffineElt, ExtAffineEltHash> layer{identity()};
  for (const auto& g : word.letters) {
    const ExtAffineElt s = generator(g);
    std::unordered_set<ExtAffineElt, ExtAffineEltHash> next = layer;
    for (const auto& x : layer) next.insert(x * s);
    layer = std::move(next);
  }
  std::vector<ExtAffineElt> out;
  out.reserve(layer.size());
  for (const auto& x : layer) out.push_back(x * word.omega);
  std::sort(out.begin(), out.end());
  return out;
}

bool AffineWeyl::adm_contains(const WeightVec& lambda, const ExtAffineElt& w) const {
  if (!datum_.is_dominant(lambda)) throw InvalidInput("Adm(lambda) needs a dominant lambda");
  std::set<WeightVec> orbit;
  for (const auto& v : datum_.weyl_group()) orbit.insert(v.act(lambda));
  for (const auto& t : orbit) {
    if (bruhat_leq(w, translation(t))) return true;
  }
  return false;
}

std::vector<ExtAffineElt> AffineWeyl::adm_set(const WeightVec& lambda) const {
  if (!datum_.is_dominant(lambda)) throw InvalidInput("Adm(lambda) needs a dominant lambda");
  std::set<WeightVec> orbit;
  for (const auto& v : datum_.weyl_group()) orbit.insert(v.act(lambda));
  std::set<ExtAffineElt> all;
  for (const auto& t : orbit) {
    for (auto& x : bruhat_interval(translation(t))) all.insert(std::move(x));
  }
  return {all.begin(), all.end()};
}

bool AffineWeyl::in_positive_cone(const WeightVec& diff) const {
  for (int j = 0; j < f(); ++j) {
    int64_t partial = 0;
    for (int i = 0; i < n(); ++i) {
      partial += diff(j, i);
      if (i + 1 < n() && partial < 0) return false;
    }
    if (partial != 0) return false;
  }
  return true;
}

bool AffineWeyl::up_leq(const ExtAffineElt& u, const ExtAffineElt& w, int64_t box) const {
  // On W~^+ the up-order coincides with the Bruhat order.
  if (is_dominant_elt(u) && is_dominant_elt(w)) return bruhat_leq(u, w);
  return up_leq_by_chain(u, w, box);
}

namespace {

void check_box(const ExtAffineElt& x, int64_t box) {
  for (int64_t t : x.trans().raw()) {
    if (std::abs(t) > box) {
      throw InconclusiveError("up-order chain search left the bounding box |t| <= " + std::to_string(box));
    }
  }
}

}  // namespace

bool AffineWeyl::up_leq_by_chain(const ExtAffineElt& u, const ExtAffineElt& w, int64_t box) const {
  check_shape(u);
  check_shape(w);
  if (omega_component(u) != omega_component(w)) return false;
  if (u == w) return true;
  const WeightVec target = sample_image(w);
  if (!in_positive_cone(target - sample_image(u))) return false;
  check_box(u, box);
  check_box(w, box);

  // Every upward reflection raises the sample point in the positive-root cone,
  // so a chain never leaves the cone interval between u(c) and w(c).
  std::unordered_set<ExtAffineElt, ExtAffineEltHash> seen{u};
  std::deque<ExtAffineElt> queue{u};
  while (!queue.empty()) {
    const ExtAffineElt x = queue.front();
    queue.pop_front();
    const WeightVec px = sample_image(x);
    for (const auto& beta : datum_.positive_roots()) {
      const int64_t v = datum_.pairing(px, beta);
      for (int64_t m = floor_div(v, sample_den_) + 1;; ++m) {
        WeightVec moved = px;
        const int64_t shift = m * sample_den_ - v;
        moved(beta.j, beta.i) += shift;
        moved(beta.j, beta.k) -= shift;
        if (!in_positive_cone(target - moved)) break;
        ExtAffineElt y = affine_reflection(beta, m) * x;
        if (y == w) return true;
        check_box(y, box);
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  return false;
}

std::vector<ExtAffineElt> AffineWeyl::up_lower_dominant(const ExtAffineElt& w, int64_t box) const {
  check_shape(w);
  check_box(w, box);
  const WeightVec top = sample_image(w);
  // Lower bound: a dominant point dominates its own X^0-projection; compare
  // after scaling by n so the projection stays integral.
  WeightVec floor_pt(n(), f());
  for (int j = 0; j < f(); ++j) {
    int64_t s = 0;
    for (int i = 0; i < n(); ++i) s += top(j, i);
    for (int i = 0; i < n(); ++i) floor_pt(j, i) = s;
  }
  const int64_t scale = n();

  std::unordered_set<ExtAffineElt, ExtAffineEltHash> seen{w};
  std::deque<ExtAffineElt> queue{w};
  std::vector<ExtAffineElt> out;
  while (!queue.empty()) {
    const ExtAffineElt x = queue.front();
    queue.pop_front();
    if (is_dominant_elt(x)) out.push_back(x);
    const WeightVec px = sample_image(x);
    for (const auto& beta : datum_.positive_roots()) {
      const int64_t v = datum_.pairing(px, beta);
      for (int64_t m = floor_div(v, sample_den_);; --m) {
        WeightVec moved = px;
        const int64_t shift = v - m * sample_den_;
        moved(beta.j, beta.i) -= shift;
        moved(beta.j, beta.k) += shift;
        if (!in_positive_cone(scale * moved - floor_pt)) break;
        ExtAffineElt y = affine_reflection(beta, m) * x;
        check_box(y, box);
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightVec AffineWeyl::p_dot(const ExtAffineElt& w, const WeightVec& lambda) const {
  check_shape(w);
  const WeightVec& eta = datum_.eta();
  return p() * w.trans() + w.fin().act(lambda + eta) - eta;
}

}  // namespace alcove
