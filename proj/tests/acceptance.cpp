// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <path to alcove CLI>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "alcove/errors.hpp"
#include "alcove/oracle.hpp"

using namespace alcove;
namespace fs = std::filesystem;

namespace {

struct Triple {
  int n, f;
  int64_t p;
};

std::string label(const Triple& t) {
  return "(" + std::to_string(t.n) + "," + std::to_string(t.f) + "," + std::to_string(t.p) + ")";
}

int failures = 0;

void report(int k, bool pass, const std::string& detail, double seconds) {
  if (!pass) ++failures;
  std::printf("%s criterion %d: %s [%.1fs]\n", pass ? "PASS" : "FAIL", k, detail.c_str(), seconds);
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Tally {
  int64_t checked = 0, failed = 0;
  std::string notes;
  void add(const SweepReport& rep, const Triple& t) {
    for (const auto& r : rep.results) {
      checked += r.checked;
      failed += r.failed;
      if (r.checked == 0) {
        ++failed;
        notes += " " + r.name + label(t) + " checked nothing;";
      }
      if (r.failed) notes += " " + r.name + label(t) + " failed " + std::to_string(r.failed) + ";";
    }
  }
  std::string summary() const {
    return std::to_string(checked) + " checks, " + std::to_string(failed) + " failures" + notes;
  }
};

SweepConfig base(const Triple& t, std::vector<std::string> only) {
  SweepConfig c;
  c.n = t.n, c.f = t.f, c.p = t.p;
  c.only = std::move(only);
  return c;
}

int64_t power(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Triple> orders{{2, 1, 7}, {3, 1, 7}, {2, 2, 7}};
  const std::vector<Triple> lemmas{{2, 1, 7}, {3, 1, 37}};
  const std::vector<Triple> herzig{{2, 1, 11}, {3, 1, 37}, {2, 2, 23}};

  {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (const auto& tr : orders) {
      auto c = base(tr, {"bruhat-order", "up-order"});
      c.order_length = 6;
      t.add(lemma_sweeps(c), tr);
    }
    const double s = since(t0);
    report(1, t.failed == 0 && s <= 300, "Bruhat and up-order vs brute force, all pairs with length <= 6: " + t.summary(), s);
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    bool enough = true;
    for (const auto& tr : orders) {
      auto c = base(tr, {"length"});
      c.length_samples = 100000;
      const auto rep = lemma_sweeps(c);
      enough = enough && rep.results[0].checked >= 100000;
      t.add(rep, tr);
    }
    report(2, t.failed == 0 && enough, "hyperplane length vs closed form, 1e5 samples per config: " + t.summary(), since(t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (const auto& tr : lemmas) {
      auto c = base(tr, {"reduced1", "omega", "reduced2", "subregular", "reduced-w0", "0gen"});
      c.box = 3;
      t.add(lemma_sweeps(c), tr);
    }
    const double s = since(t0);
    report(3, t.failed == 0 && s <= 1800, "lemma sweeps with box radius 3 for n=2,3: " + t.summary(), s);
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    int64_t checked = 0, failed = 0;
    std::string notes;
    for (const auto& tr : herzig) {
      const RootDatum d(tr.n, tr.f, tr.p);
      const Herzig H(d);
      const auto taus = sample_taus(d, d.h_eta(), 100, 11);
      if (taus.size() < 100) {
        ++failed;
        notes += " only " + std::to_string(taus.size()) + " parameters for " + label(tr) + ";";
      }
      const size_t want_w = static_cast<size_t>(power(tr.n == 2 ? 2 : 9, tr.f));
      const size_t want_obv = static_cast<size_t>(power(factorial(tr.n), tr.f));
      for (const auto& x : taus) {
        const TameParam tau{x};
        ++checked;
        try {
          const auto w = H.wset(tau);
          const auto obv = H.wobv(tau);
          bool ok = H.wset_by_definition(tau) == w && w.size() == want_w && obv.size() == want_obv;
          for (const auto& s : obv) ok = ok && w.contains(s);
          if (!ok) {
            ++failed;
            notes += " " + x.to_string() + label(tr) + " |W?|=" + std::to_string(w.size()) +
                     " |Wobv|=" + std::to_string(obv.size()) + ";";
          }
        } catch (const Error& e) {
          ++failed;
          notes += std::string(" ") + e.what() + ";";
        }
      }
    }
    report(4, failed == 0,
           "W? by definition equals W? by characterization, |W?| = 2, 9, 4 and |Wobv| = (n!)^f on 100 parameters per config: " +
               std::to_string(checked) + " parameters, " + std::to_string(failed) + " failures" + notes,
           since(t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (const auto& tr : lemmas) t.add(lemma_sweeps(base(tr, {"obvweight", "isolating", "covering-char"})), tr);
    report(5, t.failed == 0, "obvious weight, isolating and covering characterization sweeps: " + t.summary(), since(t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (const auto& tr : lemmas) t.add(lemma_sweeps(base(tr, {"elimination"})), tr);
    report(6, t.failed == 0, "self-revalidating elimination certificates for every eliminable weight: " + t.summary(), since(t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (const auto& tr : lemmas) t.add(lemma_sweeps(base(tr, {"connectivity"})), tr);
    report(7, t.failed == 0, "connectivity graph connected, every vertex reaches an extremal weight: " + t.summary(), since(t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::string>> targets{
        {"drop-restricted-hypothesis", "reduced1"},
        {"drop-uparrow", "subregular"},
        {"depth-shrink", "0gen"},
        {"0gen-drop-c0", "0gen"},
        {"0gen-drop-zr", "0gen"},
    };
    int biting = 0;
    std::string notes;
    for (const auto& [m, sweep] : targets) {
      int64_t bad = 0;
      for (const auto& tr : lemmas) {
        auto c = base(tr, {sweep});
        c.mutation = m;
        bad += lemma_sweeps(c).total_failed();
      }
      biting += bad > 0;
      notes += " " + m + ":" + std::to_string(bad);
    }
    report(8, biting >= 3,
           std::to_string(biting) + " of " + std::to_string(targets.size()) + " mutations produce counterexamples;" + notes,
           since(t0));
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    if (cli.empty() || !fs::exists(cli)) {
      report(9, false, "CLI binary not given or missing", since(t0));
    } else {
      const fs::path dir = fs::temp_directory_path() / ("alcove_acceptance_" + std::to_string(::getpid()));
      fs::create_directories(dir);
      const std::vector<std::string> golden{
          "wset --n 3 --f 1 --p 37 --s 231 --mu 20,10,0",
          "wset --n 2 --f 1 --p 7 --s 21 --mu 4,0",
          "graph --n 3 --f 1 --p 37 --s 231 --mu 20,10,0 --format json",
          "graph --n 3 --f 1 --p 37 --s 231 --mu 20,10,0 --format dot",
          "graph --n 2 --f 1 --p 7 --s 21 --mu 4,0 --format dot",
          "graph --n 2 --f 2 --p 23 --s '21;12' --mu '12,0;10,0' --format dot",
          "eliminate --n 3 --f 1 --p 37 --s 231 --mu 20,10,0 --sigma 20,10,0",
          "verify --n 2 --f 1 --p 7 --json --report " + (dir / "report.json").string(),
      };
      int identical = 0;
      std::string notes;
      for (size_t g = 0; g < golden.size(); ++g) {
        std::vector<std::string> outs;
        bool ran = true;
        for (int run = 0; run < 3; ++run) {
          const fs::path out = dir / ("g" + std::to_string(g) + "_" + std::to_string(run));
          const std::string cmd = "'" + cli + "' " + golden[g] + " > '" + out.string() + "' 2>/dev/null";
          ran = ran && std::system(cmd.c_str()) == 0;
          outs.push_back(slurp(out));
        }
        const bool same = ran && !outs[0].empty() && outs[0] == outs[1] && outs[1] == outs[2];
        identical += same;
        if (!same) notes += " differs or failed: " + golden[g] + ";";
      }
      fs::remove_all(dir);
      report(9, identical == static_cast<int>(golden.size()),
             std::to_string(identical) + " of " + std::to_string(golden.size()) +
                 " golden configs byte-identical across 3 runs" + notes,
             since(t0));
    }
  }
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
