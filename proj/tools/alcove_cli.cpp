// alcove: W?, connectivity graphs, weight elimination and lemma sweeps from the
// command line.
//
// Exit codes: 0 success, 1 malformed input, 2 precondition refusal,
// 3 resource budget, 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "alcove/errors.hpp"
#include "alcove/json_io.hpp"
#include "alcove/oracle.hpp"

using namespace alcove;

namespace {

constexpr int kOk = 0, kMalformed = 1, kRefused = 2, kBudget = 3, kVerifyFailed = 4;

struct Options {
  int n = 0, f = 1;
  int64_t p = 0;
  std::string s, mu, sigma, format = "json", out, report, mutate;
  bool json = false;
  int threads = 0;
};

int default_threads() {
  if (const char* e = std::getenv("ALCOVE_THREADS")) {
    try {
      return std::max(1, std::stoi(e));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidInput("cannot write " + path);
  os << text;
}

int fail(int code, const std::string& kind, const std::string& reason, const std::string& detail) {
  Json j{{"error", Json{{"kind", kind}, {"reason", reason}, {"detail", detail}}}, {"exit_code", code}};
  std::cerr << j.dump(2) << "\n";
  return code;
}

void need_datum(const Options& o) {
  if (o.n == 0 || o.p == 0) throw InvalidInput("--n and --p are required");
}

TameParam read_tau(const Options& o) {
  if (o.s.empty() || o.mu.empty()) throw InvalidInput("--s and --mu are required");
  return {ExtAffineElt(parse_weight(o.mu, o.n, o.f), parse_permutation(o.s, o.n, o.f))};
}

Json config_json(const Options& o) { return Json{{"n", o.n}, {"f", o.f}, {"p", o.p}}; }

int cmd_wset(const Options& o) {
  if (o.format != "json") {
    throw PreconditionError("unsupported format", "wset is a set, not a graph; only --format json is available");
  }
  need_datum(o);
  const Herzig H(RootDatum(o.n, o.f, o.p));
  const TameParam tau = read_tau(o);
  const auto pres = H.wset_presentations(tau);
  const auto w = H.wset(tau);
  const auto obv = H.wobv(tau);
  const auto by_def = H.wset_by_definition(tau);
  Json weights = Json::array();
  for (const auto& sigma : w) {
    Json ps = Json::array();
    for (const auto& pr : pres) {
      if (H.dl().serre_weight(pr) == sigma) ps.push_back(to_json(pr));
    }
    weights.push_back(Json{{"lambda", sigma.to_string()},
                           {"extremal", obv.contains(sigma)},
                           {"depth", H.dl().depth(sigma)},
                           {"d_sigma", H.dl().d_sigma(sigma)},
                           {"presentations", std::move(ps)}});
  }
  Json obv_list = Json::array();
  for (const auto& s : obv) obv_list.push_back(s.to_string());
  const ExtAffineElt used = H.present(tau, H.datum().h_eta(), "W?");
  Json j{{"command", "wset"},
         {"config", config_json(o)},
         {"tau", to_json(tau.elt)},
         {"presentation_used", to_json(used)},
         {"genericity", H.genericity(tau)},
         {"size", w.size()},
         {"wset", std::move(weights)},
         {"wobv", std::move(obv_list)},
         {"definition_agrees", by_def == w}};
  emit(j.dump(2) + "\n", o.out);
  return by_def == w ? kOk : kVerifyFailed;
}

int cmd_graph(const Options& o) {
  if (o.format != "json" && o.format != "dot") throw InvalidInput("--format must be json or dot");
  need_datum(o);
  const Herzig H(RootDatum(o.n, o.f, o.p));
  const TameParam tau = read_tau(o);
  const auto g = H.connectivity_graph(tau);
  if (o.format == "dot") {
    emit(graph_to_dot(g), o.out);
  } else {
    Json j{{"command", "graph"}, {"config", config_json(o)}, {"tau", to_json(tau.elt)}};
    const Json body = graph_to_json(g, H);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(j.dump(2) + "\n", o.out);
  }
  return (g.connected() && g.all_reach_extremal() && g.stray_edges == 0) ? kOk : kVerifyFailed;
}

int cmd_eliminate(const Options& o) {
  if (o.format != "json") throw PreconditionError("unsupported format", "certificates are JSON only");
  need_datum(o);
  if (o.sigma.empty()) throw InvalidInput("--sigma is required");
  const Herzig H(RootDatum(o.n, o.f, o.p));
  const TameParam tau = read_tau(o);
  const SerreWeight sigma = SerreWeight::make(H.datum(), parse_weight(o.sigma, o.n, o.f));
  if (H.wset(tau).contains(sigma)) {
    Json witness = Json::array();
    for (const auto& pr : H.wset_presentations(tau)) {
      if (H.dl().serre_weight(pr) == sigma) witness.push_back(to_json(pr));
    }
    Json j{{"error", Json{{"kind", "refusal"}, {"reason", "not eliminable"}, {"detail", sigma.to_string() + " lies in W?"}}},
           {"membership_witness", std::move(witness)},
           {"exit_code", kRefused}};
    std::cerr << j.dump(2) << "\n";
    return kRefused;
  }
  const auto cert = H.eliminate(sigma, tau);
  const std::string why = H.replay(cert);
  Json j{{"command", "eliminate"}, {"config", config_json(o)}, {"certificate", to_json(cert)},
         {"replay", why.empty() ? Json("ok") : Json(why)}};
  emit(j.dump(2) + "\n", o.out);
  return why.empty() ? kOk : kVerifyFailed;
}

std::vector<SweepConfig> desk_configs() {
  SweepConfig a;
  a.n = 2, a.f = 1, a.p = 7;
  SweepConfig b;
  b.n = 3, b.f = 1, b.p = 37;
  SweepConfig c;
  c.n = 2, c.f = 2, c.p = 11, c.box = 2, c.order_length = 5;
  return {a, b, c};
}

int cmd_verify(const Options& o) {
  if (o.format != "json") throw PreconditionError("unsupported format", "reports are JSON only");
  std::vector<SweepConfig> configs;
  if (o.n != 0) {
    if (o.p == 0) throw InvalidInput("--p is required with --n");
    SweepConfig c;
    c.n = o.n, c.f = o.f, c.p = o.p;
    configs.push_back(c);
  } else {
    configs = desk_configs();
  }
  Json runs = Json::array();
  bool pass = true;
  for (auto& c : configs) {
    c.threads = o.threads;
    c.mutation = o.mutate;
    const auto rep = lemma_sweeps(c);
    pass = pass && rep.all_pass();
    runs.push_back(rep.to_json());
  }
  Json j{{"command", "verify"},
         {"mutation", o.mutate.empty() ? Json(nullptr) : Json(o.mutate)},
         {"all_pass", pass},
         {"runs", std::move(runs)}};
  const std::string text = j.dump(2) + "\n";
  emit(text, o.report.empty() ? std::string("verify_report.json") : o.report);
  if (o.json) std::cout << text;
  else {
    for (const auto& run : j["runs"]) {
      for (const auto& s : run["sweeps"]) {
        std::cout << (s["pass"].get<bool>() ? "pass " : "FAIL ") << run["config"]["n"] << "," << run["config"]["f"]
                  << "," << run["config"]["p"] << " " << s["name"].get<std::string>() << " checked=" << s["checked"]
                  << " failed=" << s["failed"] << "\n";
      }
    }
  }
  return pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alcove combinatorics of Serre weights for Res GL_n"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  auto add_datum = [&](CLI::App* c) {
    c->add_option("--n", o.n, "rank n of GL_n");
    c->add_option("--f", o.f, "number of embeddings");
    c->add_option("--p", o.p, "the prime p");
    c->add_option("--threads", o.threads, "worker threads (default from ALCOVE_THREADS)");
  };
  auto add_tau = [&](CLI::App* c) {
    c->add_option("--s", o.s, "permutation, one-line per embedding joined by ';' (e.g. 231)");
    c->add_option("--mu", o.mu, "weight, comma lists joined by ';' (e.g. 20,10,0)");
    c->add_option("--format", o.format, "json or dot");
    c->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* wset = app.add_subcommand("wset", "Herzig's set W? with obvious weights and presentations");
  add_datum(wset);
  add_tau(wset);
  auto* graph = app.add_subcommand("graph", "connectivity graph on W?");
  add_datum(graph);
  add_tau(graph);
  auto* elim = app.add_subcommand("eliminate", "weight elimination certificate");
  add_datum(elim);
  add_tau(elim);
  elim->add_option("--sigma", o.sigma, "Serre weight lambda, comma lists joined by ';'");
  auto* verify = app.add_subcommand("verify", "run the lemma sweeps against the brute-force oracle");
  add_datum(verify);
  verify->add_option("--mutate", o.mutate, "deliberately drop a hypothesis")
      ->check(CLI::IsMember(mutation_names()));
  verify->add_flag("--json", o.json, "print the report on stdout");
  verify->add_option("--report", o.report, "report path (default verify_report.json)");
  verify->add_option("--format", o.format, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*wset) return cmd_wset(o);
    if (*graph) return cmd_graph(o);
    if (*elim) return cmd_eliminate(o);
    if (*verify) return cmd_verify(o);
  } catch (const PreconditionError& e) {
    return fail(kRefused, "refusal", e.reason(), e.what());
  } catch (const InvalidInput& e) {
    return fail(kMalformed, "malformed input", "invalid input", e.what());
  } catch (const BudgetError& e) {
    return fail(kBudget, "budget", "resource budget exceeded", e.what());
  } catch (const Error& e) {
    return fail(kVerifyFailed, "verification failure", "internal check failed", e.what());
  }
  return kMalformed;
}
