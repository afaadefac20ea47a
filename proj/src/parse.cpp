#include "sp2g/parse.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

namespace sp2g {

namespace {

// UTF-8 for the superscript two accepted as an alias for "^2".
constexpr std::string_view kSuperscriptTwo = "\xc2\xb2";

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_superscript_two() {
        if (text.compare(pos, kSuperscriptTwo.size(), kSuperscriptTwo) == 0) {
            pos += kSuperscriptTwo.size();
            return true;
        }
        return false;
    }
};

bool is_variable_char(char c) {
    return std::isalpha(static_cast<unsigned char>(c));
}

// Variable table: fixed when an explicit list was given, growing in order of
// first appearance otherwise.
struct VarTable {
    std::vector<char> names;
    bool fixed = false;

    int index_of(char c, const Cursor& at) {
        auto it = std::find(names.begin(), names.end(), c);
        if (it != names.end()) return static_cast<int>(it - names.begin());
        if (fixed) {
            throw ParseError("unknown variable '" + std::string(1, c) +
                             "' at position " + std::to_string(at.pos));
        }
        names.push_back(c);
        return static_cast<int>(names.size()) - 1;
    }
};

// One monomial: returns the pair of variable indices (i <= j); degree is
// checked to be exactly 2.
std::pair<int, int> parse_monomial(Cursor& c, VarTable& vars) {
    std::vector<int> factors;
    for (;;) {
        c.skip_space();
        if (c.done() || !is_variable_char(c.peek())) break;
        size_t at = c.pos;
        int idx = vars.index_of(c.peek(), c);
        ++c.pos;
        c.skip_space();
        if (c.eat('^')) {
            c.skip_space();
            if (!c.eat('2')) {
                throw ParseError("only squares are allowed, at position " +
                                 std::to_string(at));
            }
            factors.push_back(idx);
            factors.push_back(idx);
        } else if (c.eat_superscript_two()) {
            factors.push_back(idx);
            factors.push_back(idx);
        } else {
            factors.push_back(idx);
        }
        c.skip_space();
        if (c.eat('*')) continue;
        // Compact juxtaposition ("xy") continues the monomial too.
        if (!c.done() && is_variable_char(c.peek())) continue;
        break;
    }
    if (factors.size() != 2) {
        throw ParseError("every monomial must have degree exactly 2 (got degree " +
                         std::to_string(factors.size()) + ")");
    }
    int i = std::min(factors[0], factors[1]);
    int j = std::max(factors[0], factors[1]);
    return {i, j};
}

struct RawPoly {
    std::vector<std::pair<int, int>> monomials;  // (i, j) with i <= j
};

RawPoly parse_poly(Cursor& c, VarTable& vars) {
    RawPoly poly;
    c.skip_space();
    if (c.eat('0')) {
        // The zero polynomial, e.g. a component that cancelled away.
        return poly;
    }
    if (c.done() || !is_variable_char(c.peek())) {
        throw ParseError("empty polynomial at position " + std::to_string(c.pos));
    }
    for (;;) {
        poly.monomials.push_back(parse_monomial(c, vars));
        c.skip_space();
        if (!c.eat('+')) break;
    }
    return poly;
}

QuadraticForm build_form(const RawPoly& poly, int dim) {
    F2Matrix m(dim, dim);
    for (auto [i, j] : poly.monomials) {
        m.set(i, j, !m.get(i, j));  // repeated monomials cancel mod 2
    }
    return QuadraticForm(m);
}

// Optional "vars a b c" prefix; consumes it and fixes the table.
void maybe_parse_vars_prefix(Cursor& c, VarTable& vars) {
    c.skip_space();
    if (c.text.compare(c.pos, 5, "vars ") != 0) return;
    c.pos += 5;
    for (;;) {
        c.skip_space();
        if (c.done() || !is_variable_char(c.peek())) break;
        char name = c.peek();
        // The polynomial must reuse declared letters, so a repeat marks its
        // start; leave it unconsumed.
        if (std::find(vars.names.begin(), vars.names.end(), name) != vars.names.end()) {
            break;
        }
        vars.names.push_back(name);
        ++c.pos;
        // A single letter followed by '(' or '*' etc. ends the list.
        if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek()))) break;
    }
    if (vars.names.empty()) throw ParseError("empty vars list");
    vars.fixed = true;
}

}  // namespace

QuadraticForm parse_form(const std::string& text) {
    return parse_form(text, {});
}

QuadraticForm parse_form(const std::string& text, const std::vector<char>& variables) {
    Cursor c{text};
    VarTable vars;
    if (!variables.empty()) {
        vars.names = variables;
        vars.fixed = true;
    } else {
        maybe_parse_vars_prefix(c, vars);
    }
    RawPoly poly = parse_poly(c, vars);
    c.skip_space();
    if (!c.done()) {
        throw ParseError("unexpected trailing input at position " + std::to_string(c.pos));
    }
    return build_form(poly, static_cast<int>(vars.names.size()));
}

QuadraticMap parse_map(const std::string& text) {
    return parse_map(text, {});
}

QuadraticMap parse_map(const std::string& text, const std::vector<char>& variables) {
    Cursor c{text};
    VarTable vars;
    if (!variables.empty()) {
        vars.names = variables;
        vars.fixed = true;
    } else {
        maybe_parse_vars_prefix(c, vars);
    }
    c.skip_space();
    if (!c.eat('(')) {
        // A bare polynomial is a one-component map.
        RawPoly poly = parse_poly(c, vars);
        c.skip_space();
        if (!c.done()) {
            throw ParseError("unexpected trailing input at position " +
                             std::to_string(c.pos));
        }
        int dim = static_cast<int>(vars.names.size());
        return QuadraticMap(dim, {build_form(poly, dim)});
    }
    std::vector<RawPoly> polys;
    for (;;) {
        polys.push_back(parse_poly(c, vars));
        c.skip_space();
        if (c.eat(',')) continue;
        if (c.eat(')')) break;
        throw ParseError("expected ',' or ')' at position " + std::to_string(c.pos));
    }
    c.skip_space();
    if (!c.done()) {
        throw ParseError("unexpected trailing input at position " + std::to_string(c.pos));
    }
    if (polys.empty()) throw ParseError("empty tuple");
    int dim = static_cast<int>(vars.names.size());
    std::vector<QuadraticForm> comps;
    comps.reserve(polys.size());
    for (const RawPoly& p : polys) comps.push_back(build_form(p, dim));
    return QuadraticMap(dim, std::move(comps));
}

std::vector<char> default_variables(int dim) {
    switch (dim) {
        case 1: return {'x'};
        case 2: return {'x', 'y'};
        case 3: return {'x', 'y', 'z'};
        case 4: return {'w', 'x', 'y', 'z'};
        default: {
            std::vector<char> names;
            for (int i = 0; i < dim; ++i) names.push_back(static_cast<char>('a' + i));
            return names;
        }
    }
}

std::string to_string(const QuadraticForm& q, const std::vector<char>& variables) {
    if (static_cast<int>(variables.size()) != q.dim()) {
        throw std::invalid_argument("variable list does not match form dimension");
    }
    std::string out;
    for (int i = 0; i < q.dim(); ++i) {
        for (int j = i; j < q.dim(); ++j) {
            if (!q.coeff(i, j)) continue;
            if (!out.empty()) out += " + ";
            if (i == j) {
                out += variables[static_cast<size_t>(i)];
                out += "^2";
            } else {
                out += variables[static_cast<size_t>(i)];
                out += '*';
                out += variables[static_cast<size_t>(j)];
            }
        }
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const QuadraticForm& q) {
    return to_string(q, default_variables(q.dim()));
}

std::string to_string(const QuadraticMap& qm, const std::vector<char>& variables) {
    std::string out = "vars";
    for (char v : variables) {
        out += ' ';
        out += v;
    }
    out += " (";
    for (int i = 0; i < qm.dim_w(); ++i) {
        if (i) out += ", ";
        out += to_string(qm.component(i), variables);
    }
    out += ')';
    return out;
}

std::string to_string(const QuadraticMap& qm) {
    return to_string(qm, default_variables(qm.dim_v()));
}

}  // namespace sp2g
