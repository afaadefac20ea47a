#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sp2g/qmap.hpp"

namespace sp2g {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial text format. Every monomial has degree exactly 2: "x*y", the
// compact "xy", "x^2" or the alias "x²". '+' is the only operator and
// repeated monomials cancel mod 2. Variables are single letters, ordered by
// first appearance unless the text starts with an explicit "vars w x y z"
// prefix (or a list is passed in).
QuadraticForm parse_form(const std::string& text);
QuadraticForm parse_form(const std::string& text, const std::vector<char>& variables);

// Tuple syntax "(p1, p2, ...)" with one shared variable order across slots;
// dim_w is the slot count. Accepts the same optional "vars ..." prefix.
QuadraticMap parse_map(const std::string& text);
QuadraticMap parse_map(const std::string& text, const std::vector<char>& variables);

// Default variable names used when printing: the paper's letters for small
// dimensions (x,y), (x,y,z), (w,x,y,z), and a,b,c,... beyond that.
std::vector<char> default_variables(int dim);

std::string to_string(const QuadraticForm& q, const std::vector<char>& variables);
std::string to_string(const QuadraticForm& q);
// Maps print with their variable order pinned: "vars w x y z (w*x + y*z, w*y)".
std::string to_string(const QuadraticMap& qm, const std::vector<char>& variables);
std::string to_string(const QuadraticMap& qm);

}  // namespace sp2g
