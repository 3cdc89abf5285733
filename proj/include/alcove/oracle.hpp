#pragma once

// Brute-force references and exhaustive lemma sweeps. Nothing here shares code
// with the optimized order predicates: Bruhat goes through every reduced word,
// the up-order through a plain breadth-first search on alcoves.

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/json_io.hpp"

namespace alcove {

// Every reduced word of w (letters only; the length-zero part is implicit).
// Throws BudgetError when length(w) > max_length.
std::vector<std::vector<Generator>> all_reduced_words(const AffineWeyl& G, const ExtAffineElt& w,
                                                      int64_t max_length);
bool brute_bruhat(const AffineWeyl& G, const ExtAffineElt& u, const ExtAffineElt& w, int64_t max_length = 8);
// Upward single-reflection moves from u(A0), never leaving the cone interval
// below w(A0). Throws InconclusiveError when w is not reached and some move was
// cut off by the translation box.
bool brute_up(const AffineWeyl& G, const ExtAffineElt& u, const ExtAffineElt& w, int64_t box);

// Elements of length <= max_length in each Ω / X^0 class, sorted.
std::vector<ExtAffineElt> elements_up_to_length(const AffineWeyl& G, int64_t max_length);
// Dominant elements whose translation entries lie in [-radius, radius].
std::vector<ExtAffineElt> dominant_box(const AffineWeyl& G, int64_t radius);
// t_mu s with mu - eta m-deep in C0, sampled deterministically; last entry of
// the last embedding ranges over [0, p - 1).
std::vector<ExtAffineElt> sample_taus(const RootDatum& d, int64_t min_depth, size_t count, uint64_t seed);

struct SweepConfig {
  int n = 2;
  int f = 1;
  int64_t p = 7;
  int64_t box = 3;               // translation box for the lemma sweeps
  int64_t order_length = 6;      // pairs for the order equivalences
  int64_t length_samples = 2000;
  int64_t length_radius = 25;
  size_t taus = 24;              // tame parameters for the Herzig sweeps
  size_t heavy_taus = 3;         // for covering, elimination and wtintersect
  uint64_t seed = 1;
  int threads = 1;
  std::string mutation;          // empty, or one of mutation_names()
  std::vector<std::string> only; // restrict to these sweeps when non-empty
};

struct SweepResult {
  std::string name;
  int64_t checked = 0;
  int64_t failed = 0;
  std::vector<Json> counterexamples;
  Json stats = Json::object();
  void fail(Json witness);
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepResult> results;
  bool all_pass() const;
  int64_t total_failed() const;
  Json to_json() const;
};

const std::vector<std::string>& sweep_names();
const std::vector<std::string>& mutation_names();
SweepReport lemma_sweeps(const SweepConfig& config);

}  // namespace alcove
