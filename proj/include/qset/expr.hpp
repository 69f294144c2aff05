#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qset/element.hpp"

namespace qset {

/// Concrete syntax for set expressions:
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := [rational '*'] factor ('^' factor)*
///   factor   := '0' | '1' | 'e' digits | '{' expr (',' expr)* '}' | '(' expr ')'
///   rational := digits ['/' digits]
///
/// '1' is the empty set (the vacuum), '0' the zero element, 'e'n the basis
/// element with serial n, '^' the wedge, and {a,b,...} the wedge of the
/// associations of its items. Whitespace is insignificant between tokens.
struct ExprAst {
    enum class Kind { Zero, One, SerialRef, Assoc, Wedge, Sum, Paren };

    Kind kind = Kind::Zero;
    Nat serial;                    // SerialRef payload
    std::vector<ExprAst> children; // Assoc items, Wedge factors, Sum terms, Paren child
    std::vector<Rat> coeffs;       // Sum: signed coefficient per term
};

// Throws SyntaxError with the byte offset of the offending token.
ExprAst parse(std::string_view text);

Element eval(const ExprAst& ast);

Element parse_element(std::string_view text);

// Canonical nested-brace form of a set; the empty set prints as "1".
std::string hfs_braces(const Hfs& x);

// Deterministic canonical text: terms in descending serial order,
// coefficients of magnitude 1 omitted. parse of the output restores the
// element exactly.
std::string print_canonical(const Element& a);

} // namespace qset
