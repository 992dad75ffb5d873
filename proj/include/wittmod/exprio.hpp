#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "wittmod/poly.hpp"
#include "wittmod/report.hpp"
#include "wittmod/witt.hpp"

namespace wittmod {

/// Grammar (whitespace insignificant):
///   rational ::= int | int "/" posint
///   var      ::= "x"idx | "l"idx | "a" | "b"        ("l" spells lambda)
///   factor   ::= rational | var ["^" int] | "(" expr ")"
///   term     ::= factor {"*" factor}
///   expr     ::= ["-"] term {("+"|"-") term}
/// Contexts with auxiliary coefficients also accept "c"idx.
Poly parse_poly(std::string_view text, const VarContext& ctx);
std::string print_poly(const Poly& p);

///   algterm ::= [rational ["*"]] ("t[" int {"," int} "]d" idx | "d" int | "C")
///   algexpr ::= ["-"] algterm {("+"|"-") algterm}
/// "d"m is shorthand for t[m]d1 and needs rank 1.
AlgElement parse_element(std::string_view text, Algebra algebra, int rank);
std::string print_element(const AlgElement& x);
std::string print_term(const WittTerm& t);

/// Deterministic structured form of a report; keys appear in a fixed order.
nlohmann::ordered_json write_report(const Report& report);
/// Same document without timing fields, for determinism comparisons.
nlohmann::ordered_json write_report_untimed(const Report& report);

}  // namespace wittmod
