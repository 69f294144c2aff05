#include "qset/serde.hpp"

#include <string>

#include "qset/errors.hpp"

namespace qset {

using nlohmann::json;

json monomial_to_json(const Monomial& m, unsigned rank_guard) {
    json factors = json::array();
    for (const Hfs& f : m.factors()) factors.push_back(nat_str(f.serial(rank_guard)));
    return factors;
}

Monomial monomial_from_json(const json& j) {
    if (!j.is_array()) throw SyntaxError("monomial must be an array of serial strings", 0);
    std::vector<Hfs> factors;
    factors.reserve(j.size());
    for (const auto& s : j) {
        if (!s.is_string()) throw SyntaxError("factor serial must be a string", 0);
        factors.push_back(serial_decode(parse_nat(s.get<std::string>())));
    }
    for (std::size_t i = 1; i < factors.size(); ++i) {
        if (!(factors[i] < factors[i - 1])) {
            throw SyntaxError("monomial factors must be strictly descending", 0);
        }
    }
    auto [sign, m] = Monomial::normalize(std::move(factors));
    (void)sign; // descending and distinct, so the sign is +1
    return m;
}

json element_to_json(const Element& a, unsigned rank_guard) {
    json terms = json::array();
    for (const auto& [m, c] : a.terms()) {
        terms.push_back({{"coef", rat_str(c)}, {"monomial", monomial_to_json(m, rank_guard)}});
    }
    return json{{"terms", terms}};
}

Element element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw SyntaxError("element must be {\"terms\": [...]}", 0);
    }
    Element out;
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("coef") || !term.contains("monomial") ||
            !term["coef"].is_string()) {
            throw SyntaxError("term must carry \"coef\" and \"monomial\"", 0);
        }
        Monomial m = monomial_from_json(term["monomial"]);
        if (sgn(out.coeff(m)) != 0) throw SyntaxError("duplicate monomial in element", 0);
        out.accumulate(m, parse_rat(term["coef"].get<std::string>()));
    }
    return out;
}

json hfs_to_json(const Hfs& x) {
    json arr = json::array();
    for (const Hfs& c : x.children()) arr.push_back(hfs_to_json(c));
    return arr;
}

namespace {

std::pair<std::vector<Hfs>, std::vector<std::vector<Rat>>> read_matrix_file(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("rows") ||
        !j["basis"].is_array() || !j["rows"].is_array()) {
        throw SyntaxError("matrix file must carry \"basis\" and \"rows\"", 0);
    }
    std::vector<Hfs> basis;
    for (const auto& s : j["basis"]) {
        if (!s.is_string()) throw SyntaxError("basis serial must be a string", 0);
        basis.push_back(serial_decode(parse_nat(s.get<std::string>())));
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j["rows"]) {
        if (!row.is_array()) throw SyntaxError("matrix row must be an array", 0);
        std::vector<Rat> r;
        for (const auto& v : row) {
            if (!v.is_string()) throw SyntaxError("matrix entry must be a \"p/q\" string", 0);
            r.push_back(parse_rat(v.get<std::string>()));
        }
        rows.push_back(std::move(r));
    }
    return {std::move(basis), std::move(rows)};
}

} // namespace

OneBodyOperator matrix_from_json(const json& j) {
    auto [basis, rows] = read_matrix_file(j);
    return OneBodyOperator(SeedSpace(std::move(basis)), std::move(rows));
}

json matrix_to_json(const OneBodyOperator& h, unsigned rank_guard) {
    json basis = json::array();
    for (const Hfs& x : h.seed().basis()) basis.push_back(nat_str(x.serial(rank_guard)));
    json rows = json::array();
    for (const auto& row : h.matrix()) {
        json r = json::array();
        for (const Rat& v : row) r.push_back(rat_str(v));
        rows.push_back(std::move(r));
    }
    return json{{"basis", basis}, {"rows", rows}};
}

FockOperator rank_operator_from_json(const json& j) {
    auto [basis, rows] = read_matrix_file(j);
    unsigned r = 0;
    while (r <= kEnumerateRankCap && hexp(r) != Nat(basis.size())) ++r;
    if (r > kEnumerateRankCap) {
        throw DimensionMismatch("basis size must be hexp(r) for some r <= " +
                                std::to_string(kEnumerateRankCap));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].serial() != Nat(static_cast<unsigned long>(i))) {
            throw DimensionMismatch("rank operator basis must list serials 0..hexp(r)-1");
        }
    }
    return FockOperator::on_rank_basis(r, rows);
}

json fock_to_json(const FockOperator& op, unsigned rank_guard) {
    json entries = json::array();
    for (unsigned col = 0; col < op.cols().size(); ++col) {
        for (const auto& [row, v] : op.cols()[col]) {
            entries.push_back({{"row", monomial_to_json(op.basis()[row], rank_guard)},
                               {"col", monomial_to_json(op.basis()[col], rank_guard)},
                               {"coef", rat_str(v)}});
        }
    }
    return json{{"entries", entries}};
}

} // namespace qset
