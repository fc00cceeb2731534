#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lie_algebra.hpp"
#include "rational.hpp"
#include "soliton.hpp"

namespace nilsol {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_, column_;
};

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

/// Tokens of one line with '#' comments stripped.
inline std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> tokens;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        tokens.push_back({std::string(line.substr(start, pos - start)), start + 1});
    }
    return tokens;
}

inline long parse_int(const Token& tok, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument(tok.text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, tok.column,
                         std::string("expected ") + what + ", got '" + tok.text + "'");
    }
}

}  // namespace detail

/// Text format: optional comment/blank lines, a header "dim <n>", then one
/// line "i j k value" per bracket with 1 <= i < j <= n, 1 <= k <= n and a
/// nonzero rational value. The returned algebra is Jacobi-validated.
inline LieAlgebra parse_algebra(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    long dim = -1;
    LieAlgebra::BracketMap table;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto tokens = detail::tokenize_line(raw);
        if (tokens.empty()) continue;
        if (dim < 0) {
            if (tokens[0].text != "dim")
                throw ParseError(lineno, tokens[0].column, "expected 'dim <n>' header");
            if (tokens.size() != 2)
                throw ParseError(lineno, tokens[0].column, "header must be exactly 'dim <n>'");
            dim = detail::parse_int(tokens[1], lineno, "a dimension");
            if (dim < 1) throw ParseError(lineno, tokens[1].column, "dimension must be positive");
            continue;
        }
        if (tokens.size() != 4)
            throw ParseError(lineno, tokens[0].column,
                             "expected 'i j k value', got " + std::to_string(tokens.size()) +
                                 " token(s)");
        long i = detail::parse_int(tokens[0], lineno, "an index");
        long j = detail::parse_int(tokens[1], lineno, "an index");
        long k = detail::parse_int(tokens[2], lineno, "an index");
        if (i < 1 || i > dim)
            throw ParseError(lineno, tokens[0].column, "index i out of range");
        if (j <= i || j > dim)
            throw ParseError(lineno, tokens[1].column, "indices must satisfy 1 <= i < j <= dim");
        if (k < 1 || k > dim)
            throw ParseError(lineno, tokens[2].column, "index k out of range");
        Rational value;
        try {
            value = rat_from_string(tokens[3].text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, tokens[3].column, e.what());
        }
        if (sgn(value) == 0)
            throw ParseError(lineno, tokens[3].column, "structure constant must be nonzero");
        BracketTriple t{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
        if (table.count(t))
            throw ParseError(lineno, tokens[0].column, "duplicate triple " + triple_str(t));
        table.emplace(t, std::move(value));
    }
    if (dim < 0) throw ParseError(lineno ? lineno : 1, 1, "missing 'dim <n>' header");
    return LieAlgebra(static_cast<std::size_t>(dim), std::move(table));
}

/// Inverse of parse_algebra; triples ordered by (k, i, j).
inline std::string serialize(const LieAlgebra& g) {
    std::string out = "dim " + std::to_string(g.dim()) + "\n";
    if (!g.is_abelian())
        for (const auto& t : index_set(g)) {
            auto it = g.brackets().find(t);
            out += std::to_string(t.i) + " " + std::to_string(t.j) + " " +
                   std::to_string(t.k) + " " + rat_str(it->second) + "\n";
        }
    return out;
}

inline LieAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

inline void save_algebra(const LieAlgebra& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize(g);
}

}  // namespace nilsol
