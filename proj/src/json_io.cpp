#include "hgc/json_io.hpp"

#include <stdexcept>

namespace hgc {

namespace {

std::string endpoint_str(Endpoint e) {
    return (e.hair ? "h" : "v") + std::to_string(e.idx + 1);
}

Endpoint endpoint_parse(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'v' && s[0] != 'h'))
        throw std::invalid_argument("bad endpoint: " + s);
    int idx = std::stoi(s.substr(1));
    if (idx < 1) throw std::invalid_argument("endpoint index is 1-based: " + s);
    return Endpoint{s[0] == 'h', idx - 1};
}

std::string flavor_wire(Flavor f) {
    switch (f) {
        case Flavor::Abar: return "Abar";
        case Flavor::A: return "A";
        case Flavor::Aprime: return "Aprime";
    }
    return "?";
}

}  // namespace

nlohmann::ordered_json graph_to_json(const HairyGraph& g, const Parameters& p, Flavor f) {
    nlohmann::ordered_json j;
    j["m"] = p.m;
    j["n"] = p.n;
    j["flavor"] = flavor_wire(f);
    j["internal"] = g.internal_count;
    j["hairs"] = nlohmann::ordered_json::array();
    for (Dec d : g.hairs) j["hairs"].push_back({{"dec", std::string(1, dec_char(d))}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges)
        j["edges"].push_back({endpoint_str(a), endpoint_str(b)});
    return j;
}

ParsedGraph graph_from_json(const nlohmann::json& j) {
    ParsedGraph out;
    out.params = Parameters(j.at("m").get<int>(), j.at("n").get<int>());
    out.flavor = flavor_from_name(j.at("flavor").get<std::string>());
    out.graph.internal_count = j.at("internal").get<int>();
    for (const auto& h : j.at("hairs")) {
        std::string dec = h.at("dec").get<std::string>();
        if (dec.size() != 1) throw std::invalid_argument("bad decoration: " + dec);
        out.graph.hairs.push_back(dec_from_char(dec[0]));
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
        out.graph.edges.emplace_back(endpoint_parse(e[0].get<std::string>()),
                                     endpoint_parse(e[1].get<std::string>()));
    }
    return out;
}

nlohmann::ordered_json formal_to_json(const FormalSum& s) {
    nlohmann::ordered_json j;
    j["m"] = s.params().m;
    j["n"] = s.params().n;
    j["flavor"] = flavor_wire(s.flavor());
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, t] : s.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = rational_to_string(t.coeff);
        term["graph"] = graph_to_json(t.graph, s.params(), s.flavor());
        j["terms"].push_back(std::move(term));
    }
    return j;
}

FormalSum formal_from_json(const nlohmann::json& j) {
    Parameters p(j.at("m").get<int>(), j.at("n").get<int>());
    Flavor f = flavor_from_name(j.at("flavor").get<std::string>());
    FormalSum s(p, f);
    for (const auto& term : j.at("terms")) {
        auto pg = graph_from_json(term.at("graph"));
        if (!(pg.params == p) || pg.flavor != f)
            throw std::invalid_argument("formal sum: term parameters disagree with header");
        Rational c = rational_from_string(term.at("coeff").get<std::string>());
        s.add_graph(pg.graph, c);
    }
    return s;
}

}  // namespace hgc
