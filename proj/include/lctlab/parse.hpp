#ifndef LCTLAB_PARSE_HPP
#define LCTLAB_PARSE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lctlab/ideal.hpp"
#include "lctlab/polynomial.hpp"

namespace lctlab {

// Maps a parsed variable occurrence to a flat index. `level` is present for
// jet-style names x<j>_<l>. Throws parse_error for unknown variables.
using VariableResolver = std::function<int(long j, std::optional<long> level, std::size_t offset)>;

// Grammar (whitespace insignificant):
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := coeff ('*' varpow)* | varpow ('*' varpow)*
//   coeff  := integer ('/' positive-integer)?
//   varpow := varname ('^' positive-integer)?
//   varname:= 'x' index
Polynomial parse_polynomial(const std::string& text, int ambient);
Polynomial parse_polynomial(const std::string& text, int ambient, const VariableResolver& resolve);

// Comma-separated generator list.
Ideal parse_ideal(const std::string& text, int ambient);

std::vector<std::string> default_variable_names(int ambient);

// Canonical printing: grevlex-descending terms, "a/b*x0^2*x1" style.
// parse(print(p)) == p.
std::string print_monomial(const Monomial& m, const std::vector<std::string>& names);
std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& names);
std::string print_polynomial(const Polynomial& p);
std::string print_ideal(const Ideal& a);

}  // namespace lctlab

#endif
