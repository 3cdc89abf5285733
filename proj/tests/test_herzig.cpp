#include "doctest.h"

#include <set>

#include "alcove/errors.hpp"
#include "alcove/herzig.hpp"

using namespace alcove;

namespace {

WeightVec wv(std::vector<std::vector<int64_t>> rows) { return WeightVec::from_rows(rows); }
FiniteWeylElt perm(std::vector<std::vector<int>> w) { return FiniteWeylElt::from_one_line(w); }
TameParam tame(std::vector<std::vector<int64_t>> mu, std::vector<std::vector<int>> s) {
  return {ExtAffineElt(wv(mu), perm(s))};
}

}  // namespace

TEST_CASE("W? sizes and the two computation paths") {
  Herzig H2(RootDatum(2, 1, 7));
  const auto t2 = tame({{4, 0}}, {{2, 1}});
  CHECK(H2.wset(t2).size() == 2);
  CHECK(H2.wset_by_definition(t2) == H2.wset(t2));
  CHECK(H2.wobv(t2) == H2.wset(t2));

  Herzig H3(RootDatum(3, 1, 37));
  for (const auto& s : H3.datum().weyl_group()) {
    const TameParam t{ExtAffineElt(wv({{20, 10, 0}}), s)};
    const auto w = H3.wset(t);
    CHECK(w.size() == 9);
    CHECK(H3.wset_by_definition(t) == w);
    const auto obv = H3.wobv(t);
    CHECK(obv.size() == 6);
    for (const auto& sigma : obv) {
      CHECK(w.contains(sigma));
      CHECK(H3.is_extremal(sigma, t));
    }
  }

  Herzig H22(RootDatum(2, 2, 23));
  const auto t22 = tame({{12, 0}, {10, 0}}, {{2, 1}, {1, 2}});
  CHECK(H22.wset(t22).size() == 4);
  CHECK(H22.wobv(t22).size() == 4);
  CHECK(H22.wset_by_definition(t22) == H22.wset(t22));
}

TEST_CASE("W? of the CLI golden parameter") {
  Herzig H(RootDatum(3, 1, 37));
  const auto t = tame({{20, 10, 0}}, {{2, 3, 1}});
  std::set<std::string> got;
  for (const auto& s : H.wset(t)) got.insert(s.to_string());
  CHECK(got.contains("18,9,0"));
  CHECK(got.contains("35,18,10"));
  CHECK(H.genericity(t) == 9);
}

TEST_CASE("W? refuses shallow parameters") {
  Herzig H(RootDatum(3, 1, 37));
  const auto t = tame({{2, 1, 0}}, {{1, 2, 3}});
  CHECK(H.genericity(t) < 2);
  CHECK_THROWS_AS(H.wset(t), PreconditionError);
}

TEST_CASE("weight elimination") {
  Herzig H(RootDatum(3, 1, 37));
  const auto t = tame({{20, 10, 0}}, {{2, 3, 1}});
  const auto w = H.wset(t);

  const SerreWeight out = SerreWeight::make(H.datum(), wv({{20, 10, 0}}));
  REQUIRE_FALSE(w.contains(out));
  const auto cert = H.eliminate(out, t);
  CHECK(cert.sigma == out);
  CHECK(H.replay(cert).empty());
  CHECK(H.dl().is_outer(out, cert.R));

  // Tampering with the certificate must be caught.
  auto bad = cert;
  bad.sigma = *w.begin();
  CHECK_FALSE(H.replay(bad).empty());

  try {
    H.eliminate(*w.begin(), t);
    FAIL("expected a refusal");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.reason()) == "not eliminable");
  }

  Herzig H2(RootDatum(2, 1, 7));
  const auto t2 = tame({{4, 0}}, {{2, 1}});
  int certified = 0;
  for (int64_t a = 0; a < 6; ++a) {
    const SerreWeight s = SerreWeight::make(H2.datum(), wv({{a, 0}}));
    if (H2.wset(t2).contains(s) || H2.dl().depth(s) < H2.dl().d_sigma(s)) continue;
    CHECK(H2.replay(H2.eliminate(s, t2)).empty());
    ++certified;
  }
  CHECK(certified > 0);
}

TEST_CASE("connectivity graphs") {
  Herzig H2(RootDatum(2, 1, 7));
  const auto g2 = H2.connectivity_graph(tame({{4, 0}}, {{2, 1}}));
  CHECK(g2.vertices.size() == 2);
  CHECK(g2.connected());

  Herzig H3(RootDatum(3, 1, 37));
  const auto t = tame({{20, 10, 0}}, {{2, 3, 1}});
  const auto g = H3.connectivity_graph(t);
  CHECK(g.vertices.size() == 9);
  CHECK(g.connected());
  CHECK(g.all_reach_extremal());
  CHECK(g.stray_edges == 0);
  const auto w = H3.wset(t);
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    CHECK(w.contains(g.vertices[i]));
    CHECK(g.distance[i] >= 0);
    CHECK(g.extremal[static_cast<size_t>(g.chain[i].back())]);
  }
  for (const auto& e : g.edges) {
    CHECK(H3.validate_edge(e, t).empty());
    CHECK(e.sigma != e.sigma2);
  }
  const auto& a = g.edges.front();
  CHECK(H3.connect(a.sigma, a.sigma2, t).has_value());
  CHECK_FALSE(H3.connect(a.sigma, a.sigma, t).has_value());

  // 2h_eta-deep is required.
  const auto shallow = tame({{6, 3, 0}}, {{2, 3, 1}});
  CHECK(H3.genericity(shallow) < 4);
  CHECK_THROWS_AS(H3.connectivity_graph(shallow), PreconditionError);
}

TEST_CASE("admissible pairs") {
  Herzig H2(RootDatum(2, 1, 11));
  const auto t2 = tame({{5, 0}}, {{1, 2}});
  // Adm(eta) sits in the Omega-component of t_eta, so rho matches tau up to a t_{w(eta)} shift.
  CHECK_FALSE(H2.admissible_pair(t2, t2));
  for (const auto& w : H2.datum().weyl_group()) {
    const TameParam rho{t2.elt * ExtAffineElt::translation(w.act(H2.datum().eta()))};
    CHECK(H2.admissible_pair(rho, t2));
    CHECK(H2.equivalence_report(rho, t2).agree());
  }
  const auto e2 = H2.equivalence_report(tame({{2, 0}}, {{1, 2}}), t2);
  CHECK_FALSE(e2.adm);
  CHECK_FALSE(e2.jh_wset);
  CHECK_FALSE(e2.jh_wobv);
  CHECK_FALSE(e2.outer_wset);

  Herzig H3(RootDatum(3, 1, 37));
  const auto t3 = tame({{20, 10, 0}}, {{1, 2, 3}});
  for (const auto& w : H3.datum().weyl_group()) {
    const TameParam rho{t3.elt * ExtAffineElt::translation(w.act(H3.datum().eta()))};
    CHECK(H3.admissible_pair(rho, t3));
    const auto e = H3.equivalence_report(rho, t3);
    CHECK(e.agree());
    CHECK(e.jh_wset);
  }
  const auto e3 = H3.equivalence_report(tame({{17, 8, 0}}, {{1, 2, 3}}), t3);
  CHECK(e3.agree());
  CHECK_FALSE(e3.adm);

  for (const auto& s : H3.datum().weyl_group()) {
    const TameParam rho{ExtAffineElt(wv({{21, 9, 0}}), s)};
    CHECK(H3.equivalence_report(rho, t3).agree());
  }
}
