#pragma once

#include <json.hpp>

#include "qset/element.hpp"
#include "qset/quantify.hpp"

namespace qset {

// Element interchange: {"terms":[{"coef":"p/q","monomial":["s1","s2",...]}]}
// with factor serials as decimal strings, descending. Ingest validates the
// canonical shape (strictly descending factors, distinct monomials) and
// throws SyntaxError otherwise.
nlohmann::json element_to_json(const Element& a, unsigned rank_guard = kSerialRankCap);
Element element_from_json(const nlohmann::json& j);

nlohmann::json monomial_to_json(const Monomial& m, unsigned rank_guard = kSerialRankCap);
Monomial monomial_from_json(const nlohmann::json& j);

// A set as recursive arrays: each set is the array of its children,
// bottoming out at [] for the empty set.
nlohmann::json hfs_to_json(const Hfs& x);

// Operator matrix files: {"basis":["s1",...],"rows":[["p/q",...],...]} with
// rows[target][source] over the listed seed serials.
OneBodyOperator matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const OneBodyOperator& h, unsigned rank_guard = kSerialRankCap);

// Same file schema read as an operator over a full rank basis: the basis
// list must be exactly 0..hexp(r)-1 for some r (r is inferred).
FockOperator rank_operator_from_json(const nlohmann::json& j);

// Sparse export: {"entries":[{"row":[...],"col":[...],"coef":"p/q"}]}.
nlohmann::json fock_to_json(const FockOperator& op, unsigned rank_guard = kSerialRankCap);

} // namespace qset
