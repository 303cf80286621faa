#ifndef FOLBOX_TEXT_HPP_
#define FOLBOX_TEXT_HPP_

#include <string>
#include <string_view>

#include "folbox/formula.hpp"

namespace folbox {

// Grammar, tightest binding first:
//   unary    ~A  []A  <>A  forall x. A  exists x. A   (binder bodies extend right)
//   &        left associative
//   |        left associative
//   ->       right associative
//   <->      left associative
// Atoms are P(x, y), P (nullary) and x = y. Predicate names start with an
// upper-case letter, variables with a lower-case one.
//
// Throws SyntaxError on malformed input and ArityError when one predicate is
// used with two different arities.
Formula parse_formula(std::string_view text);

// Minimal-parenthesis rendering; parse_formula(print_formula(a)) == a.
std::string print_formula(const Formula& a);

bool is_variable_name(std::string_view s);
bool is_predicate_name(std::string_view s);

}  // namespace folbox

#endif  // FOLBOX_TEXT_HPP_
