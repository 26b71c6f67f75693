#include "locinv/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "locinv/formats.hpp"
#include "locinv/synthesizer.hpp"

namespace locinv {

namespace {

// Bit position of the pair {i, j}, i < j, in graph6 column-major order.
constexpr std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

constexpr std::size_t pair_bits(std::size_t n) { return n * (n - 1) / 2; }

// Unpacked working form for the search: adjacency rows and a minus-mask.
struct Compact {
    std::array<std::uint16_t, kMaxPackedOrder> rows{};
    std::uint16_t minus = 0;
};

Compact unpack(std::size_t n, StateKey key) {
    Compact c;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if ((key >> pair_bit(i, j)) & 1U) {
                c.rows[i] |= static_cast<std::uint16_t>(1U << j);
                c.rows[j] |= static_cast<std::uint16_t>(1U << i);
            }
        }
    }
    c.minus = static_cast<std::uint16_t>((key >> pair_bits(n)) & ((1U << n) - 1));
    return c;
}

StateKey pack(std::size_t n, const Compact& c) {
    StateKey key = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if ((c.rows[i] >> j) & 1U) {
                key |= StateKey{1} << pair_bit(i, j);
            }
        }
    }
    return key | (static_cast<StateKey>(c.minus) << pair_bits(n));
}

Compact invert_at(std::size_t n, Compact c, std::size_t a) {
    const std::uint16_t nbhd = c.rows[a];
    for (std::size_t x = 0; x < n; ++x) {
        if ((nbhd >> x) & 1U) {
            c.rows[x] ^= static_cast<std::uint16_t>(nbhd & ~(1U << x));
        }
    }
    c.minus ^= nbhd;
    return c;
}

void check_packable(std::size_t n) {
    if (n > kMaxPackedOrder) {
        throw ResourceError("state packing supports at most " + std::to_string(kMaxPackedOrder) + " vertices");
    }
}

}  // namespace

StateKey encode_state(const BicoloredGraph& b) {
    const std::size_t n = b.order();
    check_packable(n);
    StateKey key = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (b.graph.adjacent(i, j)) {
                key |= StateKey{1} << pair_bit(i, j);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (b.coloring[v] == Color::minus) {
            key |= StateKey{1} << (pair_bits(n) + v);
        }
    }
    return key;
}

BicoloredGraph decode_state(std::size_t n, StateKey key) {
    check_packable(n);
    Graph g(n);
    Coloring c(n);
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if ((key >> pair_bit(i, j)) & 1U) {
                g.add_edge(i, j);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if ((key >> (pair_bits(n) + v)) & 1U) {
            c.set(v, Color::minus);
        }
    }
    return BicoloredGraph(std::move(g), std::move(c));
}

std::optional<Word> min_flip_word(const BicoloredGraph& b, const BicoloredGraph& target, const OracleOptions& opts) {
    const std::size_t n = b.order();
    if (target.order() != n) {
        throw InputError("source and target must have the same order");
    }
    if (n > opts.max_order) {
        throw ResourceError("order " + std::to_string(n) + " exceeds the search cap of " +
                            std::to_string(opts.max_order));
    }
    const StateKey source = encode_state(b);
    const StateKey goal = encode_state(target);

    struct Parent {
        StateKey prev;
        Vertex letter;
    };
    std::unordered_map<StateKey, Parent> parent;
    parent.emplace(source, Parent{source, 0});

    std::vector<StateKey> frontier{source};
    bool found = source == goal;
    while (!found && !frontier.empty()) {
        std::vector<StateKey> next;
        for (StateKey key : frontier) {
            const Compact cur = unpack(n, key);
            for (std::size_t a = 0; a < n && !found; ++a) {
                const StateKey succ = pack(n, invert_at(n, cur, a));
                if (parent.emplace(succ, Parent{key, static_cast<Vertex>(a)}).second) {
                    if (parent.size() > opts.max_states) {
                        throw ResourceError("state space exceeds " + std::to_string(opts.max_states) + " states");
                    }
                    found = succ == goal;
                    next.push_back(succ);
                }
            }
            if (found) {
                break;
            }
        }
        frontier = std::move(next);
    }
    if (!found) {
        return std::nullopt;
    }
    std::vector<Vertex> letters;
    for (StateKey key = goal; key != source;) {
        const Parent& p = parent.at(key);
        letters.push_back(p.letter);
        key = p.prev;
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
}

bool CrReport::sandwich_holds() const {
    if (exact_cr && !witness_replays) {
        return false;
    }
    if (exact_cr && synthesized_length && *exact_cr > *synthesized_length) {
        return false;
    }
    if (synthesized_length && bound && *synthesized_length > *bound) {
        return false;
    }
    // A synthesized word proves reachability.
    return !(synthesized_length && !exact_cr);
}

CrReport exact_cr(const Graph& g, const OracleOptions& opts, std::string graph_id) {
    const std::size_t n = g.order();
    CrReport report;
    report.n = n;
    report.graph6 = n <= kMaxGraph6Order ? emit_graph6(g) : std::string{};
    report.graph_id = graph_id.empty() ? report.graph6 : std::move(graph_id);

    const BicoloredGraph source(g, Coloring(n, Color::plus));
    const BicoloredGraph target(g, Coloring(n, Color::minus));
    if (auto w = min_flip_word(source, target, opts)) {
        report.exact_cr = w->size();
        report.witness_replays = apply_word(source, *w) == target;
        report.witness = std::move(*w);
    }
    bool has_isolated = false;
    for (Vertex v = 0; v < n; ++v) {
        has_isolated = has_isolated || g.is_isolated(v);
    }
    if (n >= 2 && !has_isolated) {
        const CertifiedWord cw = color_reversal_word(g);
        report.synthesized_length = cw.length();
        report.bound = cw.bound;
    }
    return report;
}

std::vector<Graph> connected_graphs(std::size_t n) {
    if (n > 6) {
        throw ResourceError("internal enumeration is limited to n <= 6; supply a graph6 catalog instead");
    }
    if (n == 0) {
        return {};
    }
    const std::size_t m = pair_bits(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<std::size_t, std::size_t>> pairs(m);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            pairs[pair_bit(i, j)] = {i, j};
        }
    }
    auto as_graph = [&](std::uint32_t mask) {
        Graph g(n);
        for (std::size_t k = 0; k < m; ++k) {
            if ((mask >> k) & 1U) {
                g.add_edge(static_cast<Vertex>(pairs[k].first), static_cast<Vertex>(pairs[k].second));
            }
        }
        return g;
    };

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        bool canonical = true;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (std::size_t k = 0; k < m && canonical; ++k) {
                if ((mask >> k) & 1U) {
                    const auto [i, j] = pairs[k];
                    const std::size_t a = std::min(p[i], p[j]);
                    const std::size_t b = std::max(p[i], p[j]);
                    image |= std::uint32_t{1} << pair_bit(a, b);
                }
            }
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) {
            continue;
        }
        Graph g = as_graph(mask);
        if (g.connected()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<CrReport> survey(std::span<const Graph> graphs, std::span<const std::string> ids,
                             const OracleOptions& opts, std::size_t jobs) {
    if (!ids.empty() && ids.size() != graphs.size()) {
        throw InputError("survey ids must match graphs");
    }
    std::vector<CrReport> reports(graphs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            try {
                reports[i] = exact_cr(graphs[i], opts, ids.empty() ? std::string{} : ids[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(graphs.size(), 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return reports;
}

std::vector<CrReport> survey(std::size_t n_max, const OracleOptions& opts, std::size_t jobs) {
    std::vector<Graph> graphs;
    for (std::size_t n = 2; n <= n_max; ++n) {
        auto batch = connected_graphs(n);
        std::move(batch.begin(), batch.end(), std::back_inserter(graphs));
    }
    return survey(graphs, {}, opts, jobs);
}

SurveySummary summarize(std::span<const CrReport> reports) {
    SurveySummary s;
    s.graphs = reports.size();
    for (const auto& r : reports) {
        if (r.exact_cr) {
            s.max_cr = std::max(s.max_cr, *r.exact_cr);
            if (r.n > 0) {
                s.max_cr_over_3n = std::max(s.max_cr_over_3n, static_cast<double>(*r.exact_cr) / (3.0 * r.n));
            }
        }
        if (!r.within_3n()) {
            s.violations_3n.push_back(r.graph_id);
        }
        if (!r.sandwich_holds()) {
            s.sandwich_violations.push_back(r.graph_id);
        }
    }
    return s;
}

}  // namespace locinv
