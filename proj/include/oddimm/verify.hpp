#pragma once

#include <map>
#include <set>
#include <sstream>

#include "certificate.hpp"
#include "multigraph.hpp"

namespace oddimm {

struct CheckFlags {
    bool immersion = true;  // terminal set, path validity, edge-disjointness
    bool strong = false;
    bool totally_odd = false;
    bool clique_order = true;
};

// Every failed check carries concrete witnesses; `path` and `vertex` are
// set when the witness points at one (-1 otherwise).
struct CheckWitness {
    std::string text;
    int path = -1;
    int vertex = -1;

    CheckWitness() = default;
    CheckWitness(std::string text, int path = -1, int vertex = -1)
        : text(std::move(text)), path(path), vertex(vertex) {}
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::vector<CheckWitness> witnesses;

    CheckResult() = default;
    explicit CheckResult(std::string name) : name(std::move(name)) {}
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool overall = true;

    const CheckResult* find(const std::string& name) const {
        for (const CheckResult& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string to_text() const {
        std::ostringstream out;
        for (const CheckResult& c : checks) {
            out << "check " << c.name << ": " << (c.passed ? "ok" : "FAIL") << "\n";
            for (const CheckWitness& w : c.witnesses) out << "  witness: " << w.text << "\n";
        }
        out << (overall ? "verdict: pass" : "verdict: fail") << "\n";
        return out.str();
    }
};

// Checks the certificate against the graph it claims to live in. The
// checks share no state with any construction code; they only read the
// adjacency of g. A host mismatch is a caller error, not a failed check:
// the report would not be about the certificate's host at all.
inline VerificationReport verify(const Multigraph& g, const ImmersionCertificate& cert,
                                 const CheckFlags& flags = {}) {
    if (!g.is_simple()) throw precondition_error("verify: host must be simple");
    if (!same_graph(g, cert.host))
        throw precondition_error("verify: certificate host does not match the given graph");

    VerificationReport rep;
    auto add = [&rep](CheckResult c) {
        rep.overall = rep.overall && c.passed;
        rep.checks.push_back(std::move(c));
    };
    auto in_range = [&g](int v) { return v >= 0 && v < g.n; };
    auto rows = adjacency_bits(g);
    auto adjacent = [&rows](int u, int v) { return rows[u][v / 64] >> (v % 64) & 1; };

    if (flags.immersion) {
        CheckResult terminals{"terminals"};
        if (static_cast<int>(cert.terminals.size()) != cert.t) {
            terminals.passed = false;
            terminals.witnesses.push_back({"terminal list has " +
                                               std::to_string(cert.terminals.size()) +
                                               " entries, t = " + std::to_string(cert.t)});
        }
        std::set<int> tset;
        for (int v : cert.terminals) {
            if (!in_range(v)) {
                terminals.passed = false;
                terminals.witnesses.push_back(
                    {"terminal " + std::to_string(v) + " outside the host", -1, v});
            } else if (!tset.insert(v).second) {
                terminals.passed = false;
                terminals.witnesses.push_back(
                    {"terminal " + std::to_string(v) + " repeated", -1, v});
            }
        }
        add(std::move(terminals));

        CheckResult paths{"paths-valid"};
        for (size_t p = 0; p < cert.paths.size(); ++p) {
            const PairPath& pp = cert.paths[p];
            auto flag = [&](const std::string& why, int vertex = -1) {
                paths.passed = false;
                paths.witnesses.push_back(
                    {"path " + std::to_string(p) + ": " + why, static_cast<int>(p), vertex});
            };
            if (!in_range(pp.a) || !in_range(pp.b) || pp.a == pp.b) {
                flag("pair (" + std::to_string(pp.a) + "," + std::to_string(pp.b) + ") invalid");
                continue;
            }
            if (pp.vertices.size() < 2) {
                flag("fewer than two vertices");
                continue;
            }
            bool sound = true;
            for (int v : pp.vertices)
                if (!in_range(v)) {
                    flag("vertex " + std::to_string(v) + " outside the host", v);
                    sound = false;
                }
            if (!sound) continue;
            if (pp.vertices.front() != pp.a || pp.vertices.back() != pp.b)
                flag("endpoints (" + std::to_string(pp.vertices.front()) + "," +
                     std::to_string(pp.vertices.back()) + ") do not match the pair");
            std::set<int> dedup(pp.vertices.begin(), pp.vertices.end());
            if (dedup.size() != pp.vertices.size()) flag("repeats a vertex (not a simple path)");
            for (size_t i = 0; i + 1 < pp.vertices.size(); ++i)
                if (!adjacent(pp.vertices[i], pp.vertices[i + 1]))
                    flag("step " + std::to_string(pp.vertices[i]) + "-" +
                         std::to_string(pp.vertices[i + 1]) + " is not an edge");
        }
        add(std::move(paths));

        CheckResult disjoint{"edge-disjoint"};
        std::map<std::pair<int, int>, int> first_user;
        for (size_t p = 0; p < cert.paths.size(); ++p) {
            const auto& vs = cert.paths[p].vertices;
            for (size_t i = 0; i + 1 < vs.size(); ++i) {
                if (!in_range(vs[i]) || !in_range(vs[i + 1])) continue;
                auto key = std::minmax(vs[i], vs[i + 1]);
                auto [it, fresh] = first_user.try_emplace(key, static_cast<int>(p));
                if (!fresh) {
                    disjoint.passed = false;
                    disjoint.witnesses.push_back(
                        {"edge {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                             "} used by paths " + std::to_string(it->second) + " and " +
                             std::to_string(p),
                         static_cast<int>(p)});
                }
            }
        }
        add(std::move(disjoint));
    }

    if (flags.strong) {
        CheckResult strong{"strong"};
        std::set<int> tset(cert.terminals.begin(), cert.terminals.end());
        for (size_t p = 0; p < cert.paths.size(); ++p) {
            const auto& vs = cert.paths[p].vertices;
            for (size_t i = 1; i + 1 < vs.size(); ++i)
                if (tset.count(vs[i])) {
                    strong.passed = false;
                    strong.witnesses.push_back({"terminal " + std::to_string(vs[i]) +
                                                    " interior to path " + std::to_string(p),
                                                static_cast<int>(p), vs[i]});
                }
        }
        add(std::move(strong));
    }

    if (flags.totally_odd) {
        CheckResult odd{"totally-odd"};
        for (size_t p = 0; p < cert.paths.size(); ++p) {
            int len = cert.paths[p].length();
            if (len % 2 == 0) {
                odd.passed = false;
                odd.witnesses.push_back({"path " + std::to_string(p) + " has even length " +
                                             std::to_string(len),
                                         static_cast<int>(p)});
            }
        }
        add(std::move(odd));
    }

    if (flags.clique_order) {
        CheckResult clique{"clique-order"};
        long long want = static_cast<long long>(cert.t) * (cert.t - 1) / 2;
        if (static_cast<long long>(cert.paths.size()) != want) {
            clique.passed = false;
            clique.witnesses.push_back({"certificate has " + std::to_string(cert.paths.size()) +
                                        " paths, a K_" + std::to_string(cert.t) + " needs " +
                                        std::to_string(want)});
        }
        std::set<int> tset(cert.terminals.begin(), cert.terminals.end());
        std::map<std::pair<int, int>, int> pair_count;
        for (size_t p = 0; p < cert.paths.size(); ++p) {
            const PairPath& pp = cert.paths[p];
            if (!tset.count(pp.a) || !tset.count(pp.b) || pp.a == pp.b) {
                clique.passed = false;
                clique.witnesses.push_back({"path " + std::to_string(p) + " pair (" +
                                                std::to_string(pp.a) + "," +
                                                std::to_string(pp.b) +
                                                ") is not a pair of distinct terminals",
                                            static_cast<int>(p)});
                continue;
            }
            ++pair_count[std::minmax(pp.a, pp.b)];
        }
        for (const auto& [pair, count] : pair_count)
            if (count > 1) {
                clique.passed = false;
                clique.witnesses.push_back({"pair (" + std::to_string(pair.first) + "," +
                                            std::to_string(pair.second) + ") connected " +
                                            std::to_string(count) + " times"});
            }
        for (int a : tset)
            for (int b : tset) {
                if (a >= b) continue;
                if (!pair_count.count({a, b})) {
                    clique.passed = false;
                    clique.witnesses.push_back({"pair (" + std::to_string(a) + "," +
                                                std::to_string(b) + ") has no path"});
                }
            }
        add(std::move(clique));
    }

    return rep;
}

}  // namespace oddimm
