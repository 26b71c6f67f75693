// Acceptance runner: one [PASS]/[FAIL] line per criterion. Every tolerance,
// sample size, seed and time limit lives in the constants below.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "locinv/commands.hpp"
#include "locinv/formats.hpp"
#include "locinv/oracle.hpp"
#include "locinv/partitioner.hpp"
#include "locinv/synthesizer.hpp"
#include "test_support.hpp"

using namespace locinv;

namespace {

constexpr std::uint64_t kSeed = 20240611;

constexpr int kGadgetGraphs = 500;
constexpr std::size_t kGadgetMaxN = 12;
constexpr int kGadgetColorings = 4;
constexpr double kGadgetSeconds = 5.0;

constexpr int kReverseGraphs = 1000;
constexpr std::size_t kReverseMaxN = 12;
constexpr double kReverseSeconds = 30.0;

constexpr int kTransformTriples = 1000;
constexpr std::size_t kTransformMaxN = 12;
constexpr double kTransformSeconds = 30.0;

constexpr std::size_t kSurveyMaxN = 5;
constexpr double kSurveySeconds = 60.0;

constexpr std::size_t kSpecialMaxN = 50;
constexpr int kSpecialColorings = 4;
constexpr double kSpecialSeconds = 10.0;

constexpr int kForestGraphs = 500;
constexpr std::size_t kForestMaxN = 14;
constexpr int kPartitionTrees = 500;
constexpr std::size_t kPartitionMaxN = 14;

constexpr std::size_t kSandwichMaxN = 5;

std::size_t reversal_limit(std::size_t n) { return n % 2 == 0 ? 4 * n - 4 : 4 * n - 3; }
std::size_t transform_limit(std::size_t n) { return (11 * n - 3) / 2; }

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

bool report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", secs, limit_s);
        o.fail(buf);
    }
    char timing[48];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << " (" << timing << ")";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
    return o.ok;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("locinv_acceptance_" + name)).string();
}

std::string field(const std::string& out, const std::string& key) {
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
    }
    return {};
}

Graph from_json_edges(std::size_t n, const nlohmann::json& edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    return g;
}

template <class Pred>
std::vector<std::array<Vertex, 3>> triples(const Graph& g, Pred pred) {
    std::vector<std::array<Vertex, 3>> out;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                if (a != b && b != c && a != c && pred(a, b, c)) out.push_back({a, b, c});
    return out;
}

Outcome gadget_identities() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 1);
    auto check = [&](const Graph& g, const Word& w, const VertexSet& s, const char* what) {
        if (!testing::flips_exactly(g, w, s, rng, kGadgetColorings)) {
            o.fail(std::string(what) + " gadget failed on " + emit_graph6(g));
        }
    };
    for (int i = 0; i < kGadgetGraphs && o.ok; ++i) {
        const std::size_t n = 2 + rng() % (kGadgetMaxN - 1);
        const Graph g = testing::random_graph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
        const auto edges = g.edges();
        if (!edges.empty()) {
            const auto [a, b] = edges[rng() % edges.size()];
            check(g, gadget_edge(a, b), VertexSet(n, {a, b}), "edge");
        }
        const auto tris = triples(g, [&](Vertex a, Vertex b, Vertex c) {
            return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
        });
        if (!tris.empty()) {
            const auto [a, b, c] = tris[rng() % tris.size()];
            check(g, gadget_triangle(a, b, c), VertexSet(n, {a}), "triangle");
        }
        const auto p3s = triples(g, [&](Vertex a, Vertex b, Vertex c) {
            return g.adjacent(a, c) && g.adjacent(b, c) && !g.adjacent(a, b);
        });
        if (!p3s.empty()) {
            const auto [a, b, c] = p3s[rng() % p3s.size()];
            check(g, gadget_p3_ends(a, b, c), VertexSet(n, {a, b}), "path-ends");
            check(g, gadget_p3_end(a, b, c), VertexSet(n, {a}), "path-end");
        }
    }
    return o;
}

Outcome reverse_runs() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 2);
    const std::string path = temp_path("reverse.g6");
    for (int i = 0; i < kReverseGraphs && o.ok; ++i) {
        const std::size_t n = 2 + rng() % (kReverseMaxN - 1);
        const Graph g = testing::random_connected_graph(n, rng);
        std::ofstream(path) << emit_graph6(g) << '\n';
        std::ostringstream out;
        std::ostringstream err;
        const int code = run({"reverse", "-i", path, "--verify", "--seed", std::to_string(i)}, out, err);
        const std::string witness = emit_graph6(g);
        if (code != exit_ok || field(out.str(), "verified").rfind("yes", 0) != 0) {
            o.fail("reverse --verify failed on " + witness + ": " + err.str());
        } else if (std::stoul(field(out.str(), "length")) > reversal_limit(n)) {
            o.fail("length " + field(out.str(), "length") + " over bound on " + witness);
        }
    }
    std::filesystem::remove(path);
    return o;
}

Outcome transform_runs() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 3);
    const std::string path = temp_path("transform.g6");
    for (int i = 0; i < kTransformTriples && o.ok; ++i) {
        const std::size_t n = 2 + rng() % (kTransformMaxN - 1);
        const Graph g = testing::random_connected_graph(n, rng);
        const std::string from = emit_colors(random_coloring(n, rng));
        const std::string to = emit_colors(random_coloring(n, rng));
        std::ofstream(path) << emit_graph6(g) << '\n';
        std::ostringstream out;
        std::ostringstream err;
        const int code = run({"transform", "-i", path, "--from", from, "--to", to, "--verify"}, out, err);
        const std::string witness = emit_graph6(g) + " " + from + " -> " + to;
        if (code != exit_ok || field(out.str(), "verified").rfind("yes", 0) != 0) {
            o.fail("transform --verify failed on " + witness + ": " + err.str());
        } else if (std::stoul(field(out.str(), "length")) > transform_limit(n)) {
            o.fail("length " + field(out.str(), "length") + " over bound on " + witness);
        }
    }
    std::filesystem::remove(path);
    return o;
}

Outcome survey_3n() {
    Outcome o;
    std::ostringstream out;
    std::ostringstream err;
    if (run({"survey", "--max-n", std::to_string(kSurveyMaxN)}, out, err) != exit_ok) {
        o.fail("survey exited nonzero: " + err.str());
        return o;
    }
    std::vector<nlohmann::json> reports;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) reports.push_back(nlohmann::json::parse(line));
    if (reports.size() != 1 + 2 + 6 + 21 + 1) {
        o.fail("expected 30 reports and a summary, got " + std::to_string(reports.size()) + " lines");
        return o;
    }
    reports.pop_back();
    // cr(K2)=2, cr(P3)=9, cr(K3)=9, cr(S4)=12
    std::size_t fixed_found = 0;
    for (const auto& r : reports) {
        const std::size_t n = r["n"];
        if (r["exact_cr"].is_null() || r["exact_cr"].get<std::size_t>() > 3 * n) {
            o.fail("cr above 3n for " + r["graph6"].get<std::string>());
        }
        const Graph g = parse_graph6(r["graph6"].get<std::string>());
        const std::size_t cr = r["exact_cr"].is_null() ? 0 : r["exact_cr"].get<std::size_t>();
        std::size_t expected = 0;
        if (n == 2) expected = 2;
        if (n == 3) expected = 9;
        if (n == 4 && g.edge_count() == 3) {
            for (Vertex v = 0; v < 4; ++v) {
                if (g.degree(v) == 3) expected = 12;
            }
        }
        if (expected != 0) {
            ++fixed_found;
            if (cr != expected) {
                o.fail("cr(" + r["graph6"].get<std::string>() + ") = " + std::to_string(cr) + ", expected " +
                       std::to_string(expected));
            }
        }
    }
    if (fixed_found != 4) o.fail("did not find K2, P3, K3 and S4 in the survey");
    return o;
}

Outcome stars_and_complete() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 5);
    for (std::size_t n = 2; n <= kSpecialMaxN; ++n) {
        const std::pair<Graph, Word> cases[] = {{star_graph(n), star_word(n).word},
                                                {complete_graph(n), complete_word(n).word}};
        for (const auto& [g, w] : cases) {
            if (w.size() != 3 * n) o.fail("length " + std::to_string(w.size()) + " for n = " + std::to_string(n));
            const BicoloredGraph plus(g, Coloring(n));
            if (apply_word(plus, w) != flip(plus, VertexSet::all(n)) ||
                !testing::flips_exactly(g, w, VertexSet::all(n), rng, kSpecialColorings)) {
                o.fail("replay failed for n = " + std::to_string(n));
            }
        }
    }
    return o;
}

Outcome forests_and_partitions() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 6);
    for (int i = 0; i < kForestGraphs && o.ok; ++i) {
        const std::size_t n = 2 * (1 + rng() % (kForestMaxN / 2));
        const Graph g = testing::random_connected_graph(n, rng);
        if (!testing::perfect_forest_is_valid(g, perfect_forest(g))) o.fail("invalid perfect forest for " + emit_graph6(g));
    }
    for (int i = 0; i < kPartitionTrees && o.ok; ++i) {
        const std::size_t n = 2 * (1 + rng() % (kPartitionMaxN / 2));
        const RootedTree t = testing::random_odd_tree(n, rng);
        const EdgePartition p = p3_partition(t);
        if (p.p3s.size() != (n - 2) / 2 || !testing::partition_is_valid(t, p)) {
            o.fail("invalid partition of odd tree " + emit_graph6(testing::tree_graph(t, n)) + " rooted at " +
                   std::to_string(t.root));
        }
    }
    return o;
}

Outcome oracle_sandwich() {
    Outcome o;
    for (const CrReport& r : survey(kSandwichMaxN)) {
        const Graph g = parse_graph6(r.graph6);
        const std::size_t n = g.order();
        const BicoloredGraph plus(g, Coloring(n));
        const CertifiedWord synth = color_reversal_word(g);
        if (!r.exact_cr || r.witness.size() != *r.exact_cr) {
            o.fail("no exact value for " + r.graph6);
        } else if (apply_word(plus, r.witness) != flip(plus, VertexSet::all(n))) {
            o.fail("witness does not replay for " + r.graph6);
        } else if (apply_word(plus, synth.word) != flip(plus, VertexSet::all(n))) {
            o.fail("synthesized word does not replay for " + r.graph6);
        } else if (!(*r.exact_cr <= synth.length() && synth.length() <= reversal_limit(n))) {
            o.fail("sandwich broken for " + r.graph6);
        }
    }
    return o;
}

Outcome fixtures() {
    Outcome o;
    std::ifstream in(std::string(LOCINV_TEST_DATA) + "/fixtures.json");
    const auto fx = nlohmann::json::parse(in);

    const auto& lc = fx["local_complement"];
    const std::size_t n1 = lc["n"];
    if (local_complement(from_json_edges(n1, lc["edges"]), lc["at"].get<Vertex>()) !=
        from_json_edges(n1, lc["expected"])) {
        o.fail("local complementation fixture");
    }

    const auto& walk = fx["triangle_walk"];
    const std::size_t n2 = walk["n"];
    BicoloredGraph b(from_json_edges(n2, walk["edges"]), parse_colors(walk["colors"].get<std::string>()));
    const auto& word = walk["word"];
    for (std::size_t i = 0; i < word.size(); ++i) {
        b = local_inversion(b, word[i].get<Vertex>());
        const auto& frame = walk["frames"][i];
        const BicoloredGraph expected(from_json_edges(n2, frame["edges"]),
                                      parse_colors(frame["colors"].get<std::string>()));
        if (b != expected) o.fail("triangle walk frame " + std::to_string(i + 1));
        if (apply_word_graph(from_json_edges(n2, walk["edges"]), Word(std::vector<Vertex>(
                                 word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1))) !=
            expected.graph) {
            o.fail("graph-only walk frame " + std::to_string(i + 1));
        }
    }

    const auto& part = fx["odd_tree_partition"];
    const std::size_t n4 = part["n"];
    RootedTree t;
    for (Vertex v = 0; v < n4; ++v) t.vertices.push_back(v);
    for (const auto& e : part["edges"]) t.edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    t.root = part["root"];
    const EdgePartition p = p3_partition(t);
    std::vector<std::array<Vertex, 3>> got;
    for (const auto& q : p.p3s) got.push_back({q.end_a, q.center, q.end_b});
    if (got != part["p3s"].get<std::vector<std::array<Vertex, 3>>>() ||
        p.k2 != Edge{part["k2"][0].get<Vertex>(), part["k2"][1].get<Vertex>()}) {
        o.fail("odd-tree partition fixture");
    }
    return o;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= report(1, "gadget identities on random graphs", kGadgetSeconds, gadget_identities);
    ok &= report(2, "reverse --verify within 4n-4 / 4n-3", kReverseSeconds, reverse_runs);
    ok &= report(3, "transform --verify within floor((11n-3)/2)", kTransformSeconds, transform_runs);
    ok &= report(4, "survey to n = 5: cr <= 3n and exact small values", kSurveySeconds, survey_3n);
    ok &= report(5, "star and complete words of length 3n", kSpecialSeconds, stars_and_complete);
    ok &= report(6, "perfect forest and odd-tree partition invariants", 0, forests_and_partitions);
    ok &= report(7, "oracle sandwich for connected graphs up to n = 5", 0, oracle_sandwich);
    ok &= report(8, "worked fixtures reproduced exactly", 0, fixtures);
    return ok ? 0 : 1;
}
