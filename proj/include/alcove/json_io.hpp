#pragma once

// Text forms shared by the CLI and the reports. Weights are comma lists joined
// by ';' per embedding ("20,10,0;5,1,0"); permutations are one-line words
// joined by ';' ("231;123").

#include <string>

#include <json.hpp>

#include "alcove/herzig.hpp"

namespace alcove {

using Json = nlohmann::ordered_json;

WeightVec parse_weight(const std::string& text, int n, int f);
FiniteWeylElt parse_permutation(const std::string& text, int n, int f);

Json to_json(const ExtAffineElt& w);
Json to_json(const SerrePresentation& p);
Json to_json(const SerreWeight& s);
Json to_json(const Root& r);
Json to_json(const EliminationCertificate& c);
Json to_json(const ConnectionEdge& e);
Json graph_to_json(const ConnectivityGraph& g, const Herzig& h);
std::string graph_to_dot(const ConnectivityGraph& g);

}  // namespace alcove
