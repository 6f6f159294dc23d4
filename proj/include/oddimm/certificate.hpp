#pragma once

#include <string>

#include <json.hpp>

#include "multigraph.hpp"

namespace oddimm {

// One pair-path of a clique immersion: the two terminals it connects and
// the full vertex sequence (endpoints included). The host is simple, so
// vertex sequences determine edges.
struct PairPath {
    int a = 0;
    int b = 0;
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct ImmersionCertificate {
    Multigraph host;
    int t = 0;
    std::vector<int> terminals;
    std::vector<PairPath> paths;
    bool strong = false;       // claimed; the verifier decides
    bool totally_odd = false;  // claimed; the verifier decides
    std::string case_tag;      // which construction route produced this
};

inline std::string to_json(const ImmersionCertificate& cert) {
    nlohmann::ordered_json j;
    j["host"]["n"] = cert.host.n;
    auto& edges = j["host"]["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : cert.host.edges) edges.push_back({e.u, e.v});
    j["t"] = cert.t;
    j["terminals"] = cert.terminals;
    auto& paths = j["paths"] = nlohmann::ordered_json::array();
    for (const PairPath& p : cert.paths)
        paths.push_back({{"pair", {p.a, p.b}}, {"vertices", p.vertices}});
    j["properties"] = {{"strong", cert.strong}, {"totally_odd", cert.totally_odd}};
    j["provenance"] = {{"case", cert.case_tag}};
    return j.dump(2) + "\n";
}

inline ImmersionCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        ImmersionCertificate cert;
        cert.host = Multigraph(j.at("host").at("n").get<int>());
        for (const auto& e : j.at("host").at("edges"))
            cert.host.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        cert.t = j.at("t").get<int>();
        cert.terminals = j.at("terminals").get<std::vector<int>>();
        for (const auto& p : j.at("paths")) {
            PairPath pp;
            pp.a = p.at("pair").at(0).get<int>();
            pp.b = p.at("pair").at(1).get<int>();
            pp.vertices = p.at("vertices").get<std::vector<int>>();
            cert.paths.push_back(std::move(pp));
        }
        cert.strong = j.at("properties").at("strong").get<bool>();
        cert.totally_odd = j.at("properties").at("totally_odd").get<bool>();
        cert.case_tag = j.at("provenance").at("case").get<std::string>();
        return cert;
    } catch (const nlohmann::json::exception& ex) {
        throw error(std::string("certificate parse: ") + ex.what());
    } catch (const invariant_error& ex) {
        throw error(std::string("certificate host invalid: ") + ex.what());
    }
}

}  // namespace oddimm
