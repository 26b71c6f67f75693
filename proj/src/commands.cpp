#include "locinv/commands.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "locinv/formats.hpp"
#include "locinv/oracle.hpp"
#include "locinv/synthesizer.hpp"

namespace locinv {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;
constexpr std::size_t kVerifyColorings = 16;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> file_lines(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

bool is_blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

Coloring checked_colors(const std::string& text, std::size_t n, const char* what) {
    Coloring c = parse_colors(text);
    if (c.size() != n) {
        throw InputError(std::string(what) + " has " + std::to_string(c.size()) + " colors for a graph of order " +
                         std::to_string(n));
    }
    return c;
}

struct Common {
    std::string input;
    std::string labels_spec;
    std::uint64_t seed = kDefaultSeed;
    bool verify = false;

    std::vector<std::string> labels(std::size_t n) const {
        return labels_spec.empty() ? std::vector<std::string>{} : make_labels(labels_spec, n);
    }
};

void print_certificate(std::ostream& out, const CertifiedWord& cw, const Word& shown,
                       const std::vector<std::string>& labels) {
    out << "word: " << format_word(shown, labels) << '\n';
    out << "length: " << shown.size() << '\n';
    out << "reduced_length: " << cw.reduced_length() << '\n';
    out << "bound: " << cw.bound << '\n';
    out << "construction: " << to_string(cw.construction) << '\n';
}

int cmd_reverse(const Common& c, bool reduce, std::ostream& out, std::ostream& err) {
    const Graph g = read_graph_file(c.input);
    CertifiedWord cw = color_reversal_word(g);
    const Word shown = reduce ? cw.reduced() : cw.word;
    print_certificate(out, cw, shown, c.labels(g.order()));
    if (c.verify) {
        CertifiedWord replayed = cw;
        replayed.word = shown;
        std::mt19937_64 rng(c.seed);
        if (!verify_certified(g, replayed, rng, kVerifyColorings)) {
            err << "verification failed: replay did not reverse every color\n";
            out << "verified: no\n";
            return exit_verification_failed;
        }
        out << "verified: yes (" << kVerifyColorings + 1 << " colorings)\n";
    }
    if (!cw.within_bound()) {
        err << "bound violated: length " << cw.length() << " > " << cw.bound << '\n';
        return exit_verification_failed;
    }
    return exit_ok;
}

int cmd_transform(const Common& c, const std::string& from_text, const std::string& to_text, std::ostream& out,
                  std::ostream& err) {
    const Graph g = read_graph_file(c.input);
    const Coloring from = checked_colors(from_text, g.order(), "--from");
    const Coloring to = checked_colors(to_text, g.order(), "--to");
    const CertifiedWord cw = transform_word(g, from, to);
    print_certificate(out, cw, cw.word, c.labels(g.order()));
    out << "strategy: " << to_string(cw.construction) << '\n';
    out << "within_bound: " << (cw.within_bound() ? "yes" : "no") << '\n';
    int status = exit_ok;
    if (c.verify) {
        std::mt19937_64 rng(c.seed);
        const bool exact = apply_word(BicoloredGraph(g, from), cw.word) == BicoloredGraph(g, to);
        if (!exact || !verify_certified(g, cw, rng, kVerifyColorings)) {
            err << "verification failed: replay did not reach the target coloring\n";
            out << "verified: no\n";
            status = exit_verification_failed;
        } else {
            out << "verified: yes (" << kVerifyColorings + 1 << " colorings)\n";
        }
    }
    if (!cw.within_bound()) {
        err << "bound violated: length " << cw.length() << " > " << cw.bound << "\n"
            << "witness graph6: " << emit_graph6(g) << "\n"
            << "witness from: " << emit_colors(from) << "\n"
            << "witness to: " << emit_colors(to) << '\n';
        status = exit_verification_failed;
    }
    return status;
}

int cmd_apply(const Common& c, const std::string& colors_text, const std::string& word_text, std::ostream& out) {
    const Graph g = read_graph_file(c.input);
    const Coloring beta = checked_colors(colors_text, g.order(), "--colors");
    const Word w = parse_word(word_text, c.labels(g.order()));
    const BicoloredGraph result = apply_word(BicoloredGraph(g, beta), w);
    out << emit_edge_list(result.graph);
    out << "colors " << emit_colors(result.coloring) << '\n';
    return exit_ok;
}

int cmd_exact(const Common& c, const OracleOptions& opts, std::ostream& out) {
    const Graph g = read_graph_file(c.input);
    out << to_json(exact_cr(g, opts)).dump() << '\n';
    return exit_ok;
}

int cmd_survey(std::size_t max_n, const std::string& graph6_path, std::size_t jobs, const OracleOptions& opts,
               std::ostream& out) {
    std::vector<CrReport> reports;
    if (graph6_path.empty()) {
        reports = survey(max_n, opts, jobs);
    } else {
        std::vector<Graph> graphs;
        for (std::string line : file_lines(graph6_path)) {
            static constexpr std::string_view kHeader = ">>graph6<<";
            if (line.rfind(kHeader, 0) == 0) {
                line.erase(0, kHeader.size());
            }
            if (is_blank(line)) {
                continue;
            }
            Graph g = parse_graph6(line);
            if (g.order() >= 2 && g.order() <= max_n) {
                graphs.push_back(std::move(g));
            }
        }
        reports = survey(graphs, {}, opts, jobs);
    }
    for (const auto& r : reports) {
        out << to_json(r).dump() << '\n';
    }
    const SurveySummary summary = summarize(reports);
    out << to_json(summary).dump() << '\n';
    return summary.sandwich_violations.empty() ? exit_ok : exit_verification_failed;
}

int cmd_gadget(const std::string& kind, const std::vector<std::size_t>& params, const std::string& labels_spec,
               std::ostream& out) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw InputError("gadget " + kind + " takes " + std::to_string(count) + " arguments");
        }
    };
    auto vertex = [&](std::size_t i) { return static_cast<Vertex>(params[i]); };
    Word w;
    if (kind == "edge") {
        need(2);
        w = gadget_edge(vertex(0), vertex(1));
    } else if (kind == "triangle") {
        need(3);
        w = gadget_triangle(vertex(0), vertex(1), vertex(2));
    } else if (kind == "p3ends") {
        need(3);
        w = gadget_p3_ends(vertex(0), vertex(1), vertex(2));
    } else if (kind == "p3end") {
        need(3);
        w = gadget_p3_end(vertex(0), vertex(1), vertex(2));
    } else if (kind == "star") {
        need(1);
        w = star_word(params[0]).word;
    } else if (kind == "complete") {
        need(1);
        w = complete_word(params[0]).word;
    } else {
        throw InputError("unknown gadget '" + kind + "'");
    }
    std::size_t span = 0;
    for (Vertex a : w) {
        span = std::max<std::size_t>(span, a + 1);
    }
    const auto labels = labels_spec.empty() ? std::vector<std::string>{} : make_labels(labels_spec, span);
    out << format_word(w, labels) << '\n';
    return exit_ok;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        if (line[first] == 'n' && first + 1 < line.size() && (line[first + 1] == ' ' || line[first + 1] == '\t')) {
            return parse_edge_list(std::string_view(text));
        }
        return parse_graph6(line.substr(first));
    }
    throw InputError("'" + path + "' contains no graph");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Color reversal words for bicolored graphs under local inversions", "locinv"};
    app.require_subcommand(1);

    Common common;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", common.input, "graph file (edge list or graph6)")->required();
    };
    auto add_labels = [&](CLI::App* sub) {
        sub->add_option("--labels", common.labels_spec, "vertex names: 'a,b,c' or a prefix such as 'c'");
    };
    auto add_verify = [&](CLI::App* sub) {
        sub->add_flag("--verify", common.verify, "replay the word under random colorings");
        sub->add_option("--seed", common.seed, "seed for verification colorings");
    };

    bool reduce = false;
    auto* reverse = app.add_subcommand("reverse", "word reversing every color");
    add_input(reverse);
    add_labels(reverse);
    add_verify(reverse);
    reverse->add_flag("--reduce", reduce, "print the freely reduced word");

    std::string from_text;
    std::string to_text;
    auto* transform = app.add_subcommand("transform", "word turning one coloring into another");
    add_input(transform);
    add_labels(transform);
    add_verify(transform);
    transform->add_option("--from", from_text, "source colors, e.g. +-+")->required();
    transform->add_option("--to", to_text, "target colors")->required();

    std::string colors_text;
    std::string word_text;
    auto* apply = app.add_subcommand("apply", "apply a word to a bicolored graph");
    add_input(apply);
    add_labels(apply);
    apply->add_option("--colors", colors_text, "initial colors")->required();
    apply->add_option("--word", word_text, "comma-separated letters")->required();

    OracleOptions opts;
    auto* exact = app.add_subcommand("exact", "exact color reversal number by exhaustive search");
    add_input(exact);
    exact->add_option("--cap", opts.max_order, "largest order searched")->capture_default_str();
    exact->add_option("--max-states", opts.max_states, "visited-state cap")->capture_default_str();

    std::size_t max_n = 0;
    std::string graph6_path;
    std::size_t jobs = 1;
    auto* survey_cmd = app.add_subcommand("survey", "exact values for every connected graph up to an order");
    survey_cmd->add_option("--max-n", max_n, "largest order surveyed")->required();
    survey_cmd->add_option("--graph6", graph6_path, "graph6 catalog instead of internal enumeration");
    survey_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    survey_cmd->add_option("--cap", opts.max_order, "largest order searched")->capture_default_str();

    std::string kind;
    std::vector<std::size_t> params;
    auto* gadget = app.add_subcommand("gadget", "print a gadget word: edge A B | triangle A B C | p3ends A B C | "
                                                "p3end A B C | star N | complete N");
    gadget->add_option("kind", kind, "gadget name")->required();
    gadget->add_option("params", params, "vertex ids or order");
    add_labels(gadget);

    std::vector<const char*> argv{"locinv"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (reverse->parsed()) return cmd_reverse(common, reduce, out, err);
        if (transform->parsed()) return cmd_transform(common, from_text, to_text, out, err);
        if (apply->parsed()) return cmd_apply(common, colors_text, word_text, out);
        if (exact->parsed()) return cmd_exact(common, opts, out);
        if (survey_cmd->parsed()) {
            if (max_n > opts.max_order) {
                throw ResourceError("--max-n exceeds --cap");
            }
            return cmd_survey(max_n, graph6_path, jobs, opts, out);
        }
        if (gadget->parsed()) return cmd_gadget(kind, params, common.labels_spec, out);
    } catch (const UnsatisfiableError& e) {
        err << "unsatisfiable: " << e.what() << '\n';
        return exit_unsatisfiable;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    return exit_bad_input;
}

}  // namespace locinv
