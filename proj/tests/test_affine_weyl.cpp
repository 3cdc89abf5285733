#include "doctest.h"

#include <random>
#include <set>

#include "alcove/affine_weyl.hpp"
#include "alcove/errors.hpp"

using namespace alcove;

namespace {

WeightVec wv(std::vector<std::vector<int64_t>> rows) { return WeightVec::from_rows(rows); }
FiniteWeylElt perm(std::vector<std::vector<int>> w) { return FiniteWeylElt::from_one_line(w); }

ExtAffineElt random_elt(const AffineWeyl& G, std::mt19937_64& rng, int64_t radius) {
  std::uniform_int_distribution<int64_t> dist(-radius, radius);
  WeightVec t(G.n(), G.f());
  for (int j = 0; j < G.f(); ++j)
    for (int i = 0; i < G.n(); ++i) t(j, i) = dist(rng);
  const auto& W = G.datum().weyl_group();
  std::uniform_int_distribution<size_t> pick(0, W.size() - 1);
  return {t, W[pick(rng)]};
}

}  // namespace

TEST_CASE("n=2 small elements") {
  AffineWeyl G(RootDatum(2, 1, 7));
  const auto s = G.finite(perm({{2, 1}}));
  const auto u = ExtAffineElt(wv({{1, 0}}), perm({{2, 1}}));
  const auto t10 = G.translation(wv({{1, 0}}));
  const auto t01 = G.translation(wv({{0, 1}}));

  CHECK(G.length(G.identity()) == 0);
  CHECK(G.length(u) == 0);
  CHECK(G.length(t10) == 1);
  CHECK(G.length(s) == 1);
  CHECK(G.is_in_omega(u));
  CHECK(G.is_restricted_elt(u));
  CHECK(G.is_restricted_elt(G.identity()));
  CHECK(G.is_restricted_elt(G.w_h()));
  CHECK(G.diamond(s) == u);
  CHECK(G.omega_generator(0) == u);

  auto word = G.reduced_word(t10);
  REQUIRE(word.letters.size() == 1);
  CHECK(word.letters[0].index == 0);
  CHECK(word.omega == u);
  CHECK(word.labels() == std::vector<std::string>{"s0@0", "omega^1"});
  CHECK(G.replay(word) == t10);

  CHECK(G.bruhat_leq(u, t10));
  CHECK_FALSE(G.bruhat_leq(t10, t01));
  CHECK_FALSE(G.bruhat_leq(t01, t10));
  CHECK_FALSE(G.bruhat_leq(G.identity(), t10));

  auto interval = G.bruhat_interval(t10);
  CHECK(std::set<ExtAffineElt>(interval.begin(), interval.end()) == std::set<ExtAffineElt>{t10, u});
  CHECK(G.bruhat_interval(u) == std::vector<ExtAffineElt>{u});

  auto adm = G.adm_set(G.datum().eta());
  CHECK(std::set<ExtAffineElt>(adm.begin(), adm.end()) == std::set<ExtAffineElt>{t10, t01, u});
  CHECK_FALSE(G.adm_contains(G.datum().eta(), G.identity()));

  const auto s0 = G.generator({0, 0});
  CHECK(G.up_leq(G.identity(), s0));
  CHECK_FALSE(G.up_leq(s0, G.identity()));
  CHECK(G.up_leq_by_chain(G.identity(), s0));

  CHECK(G.p_dot(u, wv({{2, 1}})) == wv({{7, 3}}));
  CHECK(G.p_dot(G.identity(), wv({{2, 1}})) == wv({{2, 1}}));
}

TEST_CASE("length agrees with closed form and galleries are minimal") {
  std::mt19937_64 rng(3);
  for (auto [n, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 1}}) {
    AffineWeyl G(RootDatum(n, f, 11));
    for (int t = 0; t < 300; ++t) {
      const auto w = random_elt(G, rng, 4);
      const int64_t l = G.length(w);
      CHECK(l == G.length_closed_form(w));
      const auto word = G.reduced_word(w);
      CHECK(static_cast<int64_t>(word.letters.size()) == l);
      CHECK(G.replay(word) == w);
      CHECK(G.is_in_omega(word.omega));
      const auto gal = G.minimal_gallery(w);
      CHECK(static_cast<int64_t>(gal.walls.size()) == l);
      CHECK_FALSE(gal.crosses_some_wall_twice());
      const auto dec = G.omega_decompose(w);
      CHECK(dec.wa * dec.delta == w);
      CHECK(G.is_in_affine_weyl(dec.wa));
      CHECK(G.is_in_omega(dec.delta));
    }
  }
}

TEST_CASE("multiplication matches the affine action") {
  std::mt19937_64 rng(5);
  AffineWeyl G(RootDatum(3, 2, 5));
  for (int t = 0; t < 200; ++t) {
    const auto a = random_elt(G, rng, 3);
    const auto b = random_elt(G, rng, 3);
    WeightVec x(3, 2);
    std::uniform_int_distribution<int64_t> dist(-20, 20);
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 3; ++i) x(j, i) = dist(rng);
    CHECK((a * b).apply(x, 7) == a.apply(b.apply(x, 7), 7));
    CHECK(a * a.inverse() == G.identity());
    CHECK(G.p_dot(a * b, x) == G.p_dot(a, G.p_dot(b, x)));
  }
}

TEST_CASE("diamond and restricted elements") {
  for (auto [n, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {4, 1}}) {
    AffineWeyl G(RootDatum(n, f, 7));
    const auto& R = G.restricted_elements();
    CHECK(R.size() == G.datum().weyl_group().size());
    std::set<ExtAffineElt> seen;
    for (const auto& r : R) {
      CHECK(G.is_restricted_elt(r));
      CHECK(G.diamond(r) == r);
      seen.insert(r);
      WeightVec shift(n, f);
      shift(0, 0) = 5;
      CHECK(G.diamond(G.translation(shift) * r) == r);
    }
    CHECK(seen.size() == R.size());
    CHECK(G.omega_representatives().size() == static_cast<size_t>(std::pow(n, f)));
    for (const auto& d : G.omega_representatives()) CHECK(G.is_in_omega(d));
  }
}

TEST_CASE("element_of_alcove") {
  std::mt19937_64 rng(9);
  AffineWeyl G(RootDatum(3, 2, 7));
  for (int t = 0; t < 200; ++t) {
    const auto w = random_elt(G, rng, 5);
    CHECK(G.element_of_alcove(G.sample_image(w), G.sample_denominator()) == w);
  }
}

TEST_CASE("up order on dominant elements matches Bruhat") {
  AffineWeyl G(RootDatum(3, 1, 7));
  std::vector<ExtAffineElt> dom;
  for (int64_t a = -1; a <= 2; ++a)
    for (int64_t b = -1; b <= 2; ++b)
      for (const auto& w : G.datum().weyl_group()) {
        ExtAffineElt x(wv({{a, b, 0}}), w);
        if (G.is_dominant_elt(x)) dom.push_back(x);
      }
  REQUIRE(dom.size() > 10);
  for (const auto& x : dom)
    for (const auto& y : dom) CHECK(G.up_leq_by_chain(x, y) == G.bruhat_leq(x, y));
}

TEST_CASE("budget errors") {
  AffineWeyl G(RootDatum(2, 1, 7));
  CHECK_THROWS_AS(G.bruhat_interval(G.translation(wv({{9, -9}})), 6), BudgetError);
  CHECK_THROWS_AS(G.up_leq_by_chain(G.identity(), G.translation(wv({{9, -9}})), 3), InconclusiveError);
}
