#pragma once

// Text formats: graph6 (single-byte order, n <= 62), edge lists, color
// strings, comma-separated words and JSON reports.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "locinv/graph_core.hpp"
#include "locinv/oracle.hpp"
#include "locinv/synthesizer.hpp"

#include <json.hpp>

namespace locinv {

inline constexpr std::size_t kMaxGraph6Order = 62;

// Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// "n <count>" followed by one "u v" pair per line. Blank lines and lines
// starting with '#' are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// One '+' or '-' per vertex; the minus sign U+2212 is also accepted.
Coloring parse_colors(std::string_view text);
std::string emit_colors(const Coloring& c);

// Comma-separated letters. A letter is a vertex id or, when labels are
// given, one of the label names.
Word parse_word(std::string_view text, const std::vector<std::string>& labels = {});
std::string format_word(const Word& w, const std::vector<std::string>& labels = {});

// "a,b,c" gives explicit names; a single token "c" names vertex i as "c<i>".
std::vector<std::string> make_labels(std::string_view spec, std::size_t n);

inline constexpr const char* kReportSchema = "locinv.crreport/1";
inline constexpr const char* kSummarySchema = "locinv.survey-summary/1";

nlohmann::ordered_json to_json(const CrReport& r);
nlohmann::ordered_json to_json(const SurveySummary& s);

}  // namespace locinv
