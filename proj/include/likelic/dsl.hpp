#pragma once

// Line-oriented text format for contexts, scenarios and valuations.
//
//   node <label>
//   edge <label> -> <label> : <grade>
//   0edge|1edge|2edge <label> -> <label>
//   fact <label> = <grade>
//   scenario <name>
//     observe <label> = <grade>
//     clamp <label> = <grade>
//     exclude <label> -> <label> : <floor>
//   end
//
// '#' starts a comment outside quotes; labels containing whitespace are
// double-quoted, with \" and \\ escapes.

#include "likelic/graph.hpp"
#include "likelic/update.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace likelic {

/// Graph directives only; scenario blocks are syntax-checked and skipped.
/// Throws ParseError.
ContextGraph parse_context(std::string_view text);

/// Scenario blocks, with labels resolved against g. Throws ParseError.
std::vector<Scenario> parse_scenarios(std::string_view text, const ContextGraph& g);

/// A file of `fact` lines, resolved against g. Throws ParseError.
Valuation parse_valuation(std::string_view text, const ContextGraph& g);

/// Deterministic text: header comment, nodes, edges, facts, each sorted by
/// label. parse_context(serialize_context(g)) reproduces g up to vertex ids.
std::string serialize_context(const ContextGraph& g);

/// Label as it must appear in the text format (quoted when needed).
std::string quote_label(std::string_view label);

/// Whitespace-separated tokens of one line, with quoting and comments
/// handled. Exposed for other line formats (learning scripts).
struct Token {
    std::string text;
    bool quoted = false;
    std::size_t column = 1;
};

/// Throws ParseError on an unterminated quote.
std::vector<Token> tokenize_line(std::string_view line, std::size_t line_number);

/// Parse a grade token; Syntax error if not a number, Range error outside 0..6.
Likeliness parse_grade(const Token& token, std::size_t line_number);

} // namespace likelic
