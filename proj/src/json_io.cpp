#include "alcove/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int64_t parse_int(const std::string& t) {
  const std::string s = trim(t);
  if (s.empty()) throw InvalidInput("empty integer");
  size_t pos = 0;
  int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw InvalidInput("not an integer: '" + s + "'");
  return v;
}

}  // namespace

WeightVec parse_weight(const std::string& text, int n, int f) {
  const auto parts = split(text, ';');
  if (static_cast<int>(parts.size()) != f) {
    throw InvalidInput("weight '" + text + "' needs " + std::to_string(f) + " ';'-separated parts");
  }
  std::vector<std::vector<int64_t>> rows;
  for (const auto& part : parts) {
    const auto xs = split(part, ',');
    if (static_cast<int>(xs.size()) != n) {
      throw InvalidInput("weight part '" + part + "' needs " + std::to_string(n) + " entries");
    }
    std::vector<int64_t> row;
    for (const auto& x : xs) row.push_back(parse_int(x));
    rows.push_back(std::move(row));
  }
  return WeightVec::from_rows(rows);
}

FiniteWeylElt parse_permutation(const std::string& text, int n, int f) {
  const auto parts = split(text, ';');
  if (static_cast<int>(parts.size()) != f) {
    throw InvalidInput("permutation '" + text + "' needs " + std::to_string(f) + " ';'-separated words");
  }
  std::vector<std::vector<int>> words;
  for (const auto& raw : parts) {
    const std::string part = trim(raw);
    std::vector<int> w;
    if (part.find(',') != std::string::npos) {
      for (const auto& x : split(part, ',')) w.push_back(static_cast<int>(parse_int(x)));
    } else {
      for (char c : part) {
        if (c < '1' || c > '9') throw InvalidInput("bad permutation letter in '" + part + "'");
        w.push_back(c - '0');
      }
    }
    if (static_cast<int>(w.size()) != n) throw InvalidInput("permutation word '" + part + "' has the wrong length");
    words.push_back(std::move(w));
  }
  return FiniteWeylElt::from_one_line(words);
}

Json to_json(const ExtAffineElt& w) { return Json{{"mu", w.trans().to_string()}, {"s", w.fin().to_string()}}; }

Json to_json(const SerrePresentation& p) {
  return Json{{"w", to_json(p.w)}, {"omega", p.omega.to_string()}};
}

Json to_json(const SerreWeight& s) { return s.to_string(); }

Json to_json(const Root& r) { return r.label(); }

Json to_json(const EliminationCertificate& c) {
  Json lowest = Json::array();
  for (size_t i = 0; i < c.lowest.size(); ++i) {
    Json entry{{"presentation", to_json(c.lowest[i].elt)}};
    entry["det_matched"] = c.det_matched[i] ? to_json(c.det_matched[i]->elt) : Json(nullptr);
    lowest.push_back(std::move(entry));
  }
  return Json{{"sigma", to_json(c.sigma)},
              {"tau", to_json(c.tau)},
              {"sigma_presentation", to_json(c.presentation)},
              {"u", c.u.to_string()},
              {"R", to_json(c.R.elt)},
              {"lowest_presentations", std::move(lowest)}};
}

Json to_json(const ConnectionEdge& e) {
  return Json{{"sigma", to_json(e.sigma)}, {"sigma2", to_json(e.sigma2)}, {"alpha", to_json(e.alpha)},
              {"R", to_json(e.R.elt)},     {"w1", to_json(e.w1)},         {"w2", to_json(e.w2)}};
}

Json graph_to_json(const ConnectivityGraph& g, const Herzig& h) {
  Json vs = Json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    Json chain = Json::array();
    for (int x : g.chain[i]) chain.push_back(g.vertices[static_cast<size_t>(x)].to_string());
    vs.push_back(Json{{"lambda", g.vertices[i].to_string()},
                      {"extremal", static_cast<bool>(g.extremal[i])},
                      {"component", g.component[i]},
                      {"distance_to_extremal", g.distance[i]},
                      {"chain", std::move(chain)},
                      {"depth", h.dl().depth(g.vertices[i])}});
  }
  Json es = Json::array();
  for (const auto& e : g.edges) es.push_back(to_json(e));
  int comps = 0;
  for (int c : g.component) comps = std::max(comps, c + 1);
  return Json{{"vertices", std::move(vs)},
              {"edges", std::move(es)},
              {"components", comps},
              {"connected", g.connected()},
              {"all_reach_extremal", g.all_reach_extremal()},
              {"stray_edges", g.stray_edges}};
}

std::string graph_to_dot(const ConnectivityGraph& g) {
  std::ostringstream os;
  os << "graph wset {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << g.vertices[i].to_string() << "\\nd=" << g.distance[i] << "\"";
    if (g.extremal[i]) os << ", shape=box";
    os << "];\n";
  }
  std::vector<std::tuple<size_t, size_t, std::string>> lines;
  for (const auto& e : g.edges) {
    size_t a = 0, b = 0;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.vertices[i] == e.sigma) a = i;
      if (g.vertices[i] == e.sigma2) b = i;
    }
    if (a > b) std::swap(a, b);
    lines.emplace_back(a, b, "alpha=" + e.alpha.label() + " R=" + e.R.to_string());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b, label] : lines) os << "  v" << a << " -- v" << b << " [label=\"" << label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace alcove
