#include "doctest.h"

#include <set>

#include "alcove/errors.hpp"
#include "alcove/weights_dl.hpp"

using namespace alcove;

namespace {

WeightVec wv(std::vector<std::vector<int64_t>> rows) { return WeightVec::from_rows(rows); }
FiniteWeylElt perm(std::vector<std::vector<int>> w) { return FiniteWeylElt::from_one_line(w); }
DLPresentation dl(std::vector<std::vector<int64_t>> mu, std::vector<std::vector<int>> s) {
  return {ExtAffineElt(wv(mu), perm(s))};
}

// Applies the orbit formula forward: s2 = c s pi(c)^-1, mu2 = c(mu) + p k - s2 pi(k).
DLPresentation move(const RootDatum& d, const DLPresentation& r, const FiniteWeylElt& c, const WeightVec& k) {
  const FiniteWeylElt s2 = c * r.s() * d.frobenius_pi(c).inverse();
  const WeightVec mu2 = c.act(r.mu()) + d.p() * k - s2.act(d.frobenius_pi(k));
  return {ExtAffineElt(mu2, s2)};
}

}  // namespace

TEST_CASE("serre_weight examples") {
  RootDatum d(2, 1, 7);
  WeightsDL D(d);
  const ExtAffineElt e = ExtAffineElt::identity(2, 1);
  CHECK(D.serre_weight({e, d.eta()}).lambda() == wv({{0, 0}}));
  CHECK(D.serre_weight({e, wv({{4, 0}})}).lambda() == wv({{3, 0}}));
  CHECK_FALSE(D.is_valid_presentation({e, wv({{8, 0}})}));
}

TEST_CASE("presentations round trip") {
  for (auto [n, f, p] : {std::tuple{2, 1, 7}, std::tuple{3, 1, 11}, std::tuple{2, 2, 7}}) {
    RootDatum d(n, f, p);
    WeightsDL D(d);
    int64_t expected = 1;
    for (int j = 0; j < f; ++j) expected *= n;
    int tested = 0;
    for (const auto& x : D.group().restricted_elements()) {
      for (int64_t a = 1; a < p - 1; a += 2) {
        WeightVec omega = d.eta();
        omega(0, 0) += a;
        SerrePresentation pres{x, omega};
        if (!D.is_valid_presentation(pres)) continue;
        const SerreWeight sigma = D.serre_weight(pres);
        const auto all = D.presentations_of(sigma);
        CHECK(static_cast<int64_t>(all.size()) == expected);
        for (const auto& q : all) CHECK(D.serre_weight(q) == sigma);
        CHECK(D.depth(sigma) >= 0);
        ++tested;
      }
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("weights on a wall have no presentation") {
  RootDatum d(2, 1, 7);
  WeightsDL D(d);
  const SerreWeight wall = SerreWeight::make(d, wv({{6, 0}}));
  CHECK(D.presentations_of(wall).empty());
  CHECK(D.depth(wall) == -1);
  CHECK_THROWS_AS(SerreWeight::make(d, wv({{7, 0}})), InvalidInput);
}

TEST_CASE("d_sigma") {
  RootDatum d2(2, 1, 7);
  WeightsDL D2(d2);
  for (int64_t a = 0; a < 6; ++a) CHECK(D2.d_sigma(SerreWeight::make(d2, wv({{a, 0}}))) == 1);

  RootDatum d3(3, 1, 11);
  WeightsDL D3(d3);
  std::set<int64_t> seen;
  for (int64_t a = 0; a < 11; ++a)
    for (int64_t b = 0; b < 11; ++b) {
      const SerreWeight s = SerreWeight::make(d3, wv({{a + b, b, 0}}));
      if (D3.depth(s) < 0) continue;
      const int64_t v = D3.d_sigma(s);
      CHECK(v <= d3.h_eta());
      seen.insert(v);
    }
  CHECK(seen == std::set<int64_t>{1, 2});

  RootDatum d22(2, 2, 7);
  WeightsDL D22(d22);
  CHECK(D22.d_sigma(SerreWeight::make(d22, wv({{2, 0}, {3, 0}}))) == 1);
}

TEST_CASE("dl_equal") {
  RootDatum d(3, 1, 37);
  WeightsDL D(d);
  const auto r = dl({{20, 10, 0}}, {{2, 3, 1}});
  CHECK(D.dl_equal(r, r));
  const auto moved = move(d, r, perm({{3, 1, 2}}), wv({{1, 0, -1}}));
  CHECK(moved != r);
  CHECK(D.dl_equal(r, moved));
  // Both lowest alcove, difference in the root lattice: distinct.
  CHECK_FALSE(D.dl_equal(r, dl({{21, 9, 0}}, {{2, 3, 1}})));
  CHECK_FALSE(D.dl_equal(r, dl({{20, 10, 0}}, {{3, 1, 2}})));

  RootDatum d2(2, 2, 11);
  WeightsDL D2(d2);
  const auto r2 = dl({{7, 0}, {5, 1}}, {{2, 1}, {1, 2}});
  CHECK(D2.dl_equal(r2, move(d2, r2, perm({{2, 1}, {1, 2}}), wv({{0, 1}, {2, 0}}))));
}

TEST_CASE("Jordan-Holder sets") {
  RootDatum d2(2, 1, 7);
  WeightsDL D2(d2);
  const auto r2 = dl({{4, 0}}, {{2, 1}});
  CHECK(D2.jh_set(r2).size() == 2);
  CHECK(D2.jh_set_uparrow(r2) == D2.jh_set(r2));
  CHECK(D2.jh_outer(r2).size() == 2);

  RootDatum d3(3, 1, 37);
  WeightsDL D3(d3);
  for (const auto& s : d3.weyl_group()) {
    const DLPresentation r{ExtAffineElt(wv({{20, 10, 0}}), s)};
    const auto jh = D3.jh_set(r);
    CHECK(jh.size() == 9);
    CHECK(D3.jh_set_uparrow(r) == jh);
    const auto outer = D3.jh_outer(r);
    CHECK(outer.size() == 6);
    std::set<SerreWeight> distinct;
    for (const auto& o : outer) {
      CHECK(jh.contains(o.sigma));
      distinct.insert(o.sigma);
    }
    CHECK(distinct.size() == 6);
  }

  RootDatum d22(2, 2, 11);
  WeightsDL D22(d22);
  CHECK(D22.jh_set(dl({{7, 0}, {5, 1}}, {{2, 1}, {1, 2}})).size() == 4);
}

TEST_CASE("jh_set is presentation independent") {
  RootDatum d(3, 1, 37);
  WeightsDL D(d);
  const auto r = dl({{20, 10, 0}}, {{2, 3, 1}});
  int deep = 0;
  for (const auto& q : D.lowest_alcove_presentations(r)) {
    if (d.depth(q.mu() - d.eta()) < d.h_eta()) continue;
    CHECK(D.dl_equal(q, r));
    CHECK(D.jh_set(q) == D.jh_set(r));
    ++deep;
  }
  CHECK(deep > 1);
}

TEST_CASE("Jordan-Holder sets refuse shallow presentations") {
  RootDatum d(3, 1, 37);
  WeightsDL D(d);
  const auto shallow = dl({{3, 1, 0}}, {{2, 3, 1}});
  CHECK(D.genericity(shallow) < d.h_eta());
  try {
    D.jh_set(shallow);
    FAIL("expected a refusal");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.reason()) == "insufficient depth");
  }
}

TEST_CASE("covering order") {
  RootDatum d(3, 1, 37);
  WeightsDL D(d);
  const SerreWeight kappa = D.serre_weight({ExtAffineElt::identity(3, 1), wv({{20, 10, 0}})});
  CHECK(D.covers(kappa, kappa));
  // Isolating: an outer factor covered by a JH constituent is that constituent.
  const auto r = dl({{20, 10, 0}}, {{2, 3, 1}});
  const auto jh = D.jh_set(r);
  for (const auto& o : D.jh_outer(r)) {
    if (D.depth(o.sigma) < d.h_eta() + D.d_sigma(o.sigma)) continue;
    for (const auto& k : jh) {
      if (D.depth(k) < d.h_eta() + D.d_sigma(k)) continue;
      if (D.covers(k, o.sigma)) CHECK(k == o.sigma);
    }
  }
  const SerreWeight shallow = SerreWeight::make(d, wv({{1, 0, 0}}));
  CHECK_THROWS_AS(D.covers(shallow, kappa), PreconditionError);
}

TEST_CASE("outer family of a weight") {
  RootDatum d(3, 1, 37);
  WeightsDL D(d);
  const SerrePresentation pres{ExtAffineElt::identity(3, 1), wv({{20, 10, 0}})};
  const SerreWeight sigma = D.serre_weight(pres);
  const auto fam = D.outer_family(pres);
  CHECK(fam.size() == 6);
  for (const auto& r : fam) CHECK(D.is_outer(sigma, r));
}

TEST_CASE("a DL representation containing a deep weight is generic") {
  RootDatum d(3, 1, 37);
  WeightsDL D(d);
  const auto r = dl({{20, 10, 0}}, {{2, 3, 1}});
  for (const auto& sigma : D.jh_set(r)) {
    const int64_t m = D.depth(sigma) - D.d_sigma(sigma);
    if (m <= 0) continue;
    CHECK(D.genericity(r) >= m);
  }
}

TEST_CASE("presentations far from the lowest alcove") {
  RootDatum d(3, 1, 37);
  WeightsDL D(d);
  const auto r = dl({{20, 10, 0}}, {{2, 3, 1}});
  const auto far = move(d, r, perm({{2, 1, 3}}), wv({{60, -45, 13}}));
  CHECK(far.mu()(0, 0) > 1000);
  CHECK(D.genericity(far) == D.genericity(r));
  CHECK(D.lowest_alcove_presentations(far) == D.lowest_alcove_presentations(r));
  CHECK(D.dl_equal(far, r));

  RootDatum d2(2, 2, 11);
  WeightsDL D2(d2);
  const auto r2 = dl({{7, 0}, {5, 1}}, {{2, 1}, {1, 2}});
  const auto far2 = move(d2, r2, perm({{1, 2}, {2, 1}}), wv({{-30, 41}, {17, -9}}));
  CHECK(D2.lowest_alcove_presentations(far2) == D2.lowest_alcove_presentations(r2));
}
