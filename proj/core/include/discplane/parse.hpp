#pragma once

#include <map>
#include <string>
#include <string_view>

#include "discplane/scalar.hpp"

namespace discplane {

// Named values usable inside expressions (e.g. "a" bound to an algebraic root).
using Bindings = std::map<std::string, Scalar>;

// Parses a real-number expression. Atoms: integers, decimals (exact, e.g.
// 2.5 = 5/2), pi, sqrt(q), root(q, k), algebraic(c0, ..., cd; lo, hi) and bound
// names; operators + - * / ^ (integer exponents) and parentheses.
// sqrt/root take a rational argument; algebraic() picks the root of
// c0 + c1 x + ... + cd x^d in [lo, hi].
Scalar parse_scalar(std::string_view text, const Bindings& bindings = {});

// Three comma-separated expressions ("1,sqrt(13),sqrt(17)"); commas inside
// parentheses do not split.
Vec3 parse_vec3(std::string_view text, const Bindings& bindings = {});

// "name=expr"; the expression may use earlier bindings.
void parse_binding(std::string_view text, Bindings& bindings);

}  // namespace discplane
