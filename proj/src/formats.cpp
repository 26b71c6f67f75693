#include "locinv/formats.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>

namespace locinv {

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6Max = 126;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<std::size_t> parse_index(std::string_view token) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.remove_suffix(1);
    }
    if (line.empty()) {
        throw ParseError("empty graph6 string", 0);
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
        const int byte = static_cast<unsigned char>(line[i]);
        if (byte < kGraph6Offset || byte > kGraph6Max) {
            throw ParseError("graph6 byte outside 63..126", i);
        }
    }
    const int first = static_cast<unsigned char>(line[0]);
    if (first == kGraph6Max) {
        throw ParseError("graph6 orders above 62 are not supported", 0);
    }
    const std::size_t n = static_cast<std::size_t>(first - kGraph6Offset);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (line.size() != expected) {
        throw ParseError("graph6 length " + std::to_string(line.size()) + " but order " + std::to_string(n) +
                             " needs " + std::to_string(expected),
                         std::min(line.size(), expected));
    }

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int value = static_cast<unsigned char>(line[1 + k / 6]) - kGraph6Offset;
            if ((value >> (5 - k % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    for (; k < (expected - 1) * 6; ++k) {
        const int value = static_cast<unsigned char>(line[1 + k / 6]) - kGraph6Offset;
        if ((value >> (5 - k % 6)) & 1) {
            throw ParseError("nonzero graph6 padding", 1 + k / 6);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxGraph6Order) {
        throw InputError("graph6 output supports at most 62 vertices");
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(kGraph6Offset));
    out[0] = static_cast<char>(kGraph6Offset + static_cast<int>(n));
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if (g.adjacent(i, j)) {
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
            }
        }
    }
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& what) {
        throw InputError("edge list line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        std::istringstream fields{std::string(text)};
        std::string a;
        std::string b;
        std::string extra;
        fields >> a >> b;
        if (b.empty() || (fields >> extra)) {
            fail("expected two fields");
        }
        if (!n) {
            const auto count = parse_index(b);
            if (a != "n" || !count) {
                fail("expected header 'n <count>'");
            }
            n = *count;
            continue;
        }
        const auto u = parse_index(a);
        const auto v = parse_index(b);
        if (!u || !v) {
            fail("vertex ids must be non-negative integers");
        }
        if (*u >= *n || *v >= *n) {
            fail("vertex id out of range");
        }
        if (*u == *v) {
            fail("loops are not allowed");
        }
        edges.push_back(make_edge(static_cast<Vertex>(*u), static_cast<Vertex>(*v)));
    }
    if (!n) {
        throw InputError("edge list is missing its 'n <count>' header");
    }
    return Graph::from_edges(*n, edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) {
        os << u << ' ' << v << '\n';
    }
    return os.str();
}

Coloring parse_colors(std::string_view text) {
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    std::vector<Color> colors;
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] == '+') {
            colors.push_back(Color::plus);
            ++i;
        } else if (text[i] == '-') {
            colors.push_back(Color::minus);
            ++i;
        } else if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            colors.push_back(Color::minus);
            i += kUnicodeMinus.size();
        } else {
            throw InputError("invalid color symbol at position " + std::to_string(i) + " (expected '+' or '-')");
        }
    }
    return Coloring(std::move(colors));
}

std::string emit_colors(const Coloring& c) {
    std::string out;
    for (Color x : c.values()) {
        out.push_back(x == Color::plus ? '+' : '-');
    }
    return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& labels) {
    Word w;
    text = trim(text);
    if (text.empty()) {
        return w;
    }
    for (auto token : split(text, ',')) {
        if (auto id = parse_index(token)) {
            w.push_back(static_cast<Vertex>(*id));
            continue;
        }
        const auto it = std::find(labels.begin(), labels.end(), token);
        if (it == labels.end()) {
            throw InputError("unknown letter '" + std::string(token) + "'");
        }
        w.push_back(static_cast<Vertex>(it - labels.begin()));
    }
    return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out.push_back(',');
        }
        out += w[i] < labels.size() ? labels[w[i]] : std::to_string(w[i]);
    }
    return out;
}

std::vector<std::string> make_labels(std::string_view spec, std::size_t n) {
    std::vector<std::string> out;
    if (spec.find(',') != std::string_view::npos) {
        for (auto name : split(spec, ',')) {
            out.emplace_back(name);
        }
        if (out.size() < n) {
            throw InputError("label list names " + std::to_string(out.size()) + " of " + std::to_string(n) +
                             " vertices");
        }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::string(spec) + std::to_string(i));
    }
    return out;
}

nlohmann::ordered_json to_json(const CrReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["graph_id"] = r.graph_id;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["exact_cr"] = r.exact_cr ? nlohmann::ordered_json(*r.exact_cr) : nlohmann::ordered_json(nullptr);
    j["witness"] = r.witness.letters();
    j["witness_replays"] = r.witness_replays;
    j["synthesized_length"] =
        r.synthesized_length ? nlohmann::ordered_json(*r.synthesized_length) : nlohmann::ordered_json(nullptr);
    j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
    j["within_3n"] = r.within_3n();
    return j;
}

nlohmann::ordered_json to_json(const SurveySummary& s) {
    nlohmann::ordered_json j;
    j["schema"] = kSummarySchema;
    j["graphs"] = s.graphs;
    j["max_cr"] = s.max_cr;
    j["max_cr_over_3n"] = s.max_cr_over_3n;
    j["violations_3n"] = s.violations_3n;
    j["sandwich_violations"] = s.sandwich_violations;
    return j;
}

}  // namespace locinv
