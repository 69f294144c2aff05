#include "qset/expr.hpp"

#include <cctype>
#include <utility>

#include "qset/errors.hpp"

namespace qset {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAst run() {
        ExprAst root = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
        return root;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw SyntaxError(msg, at);
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string scan_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) fail("expected digits", start);
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprAst parse_expr() {
        ExprAst sum;
        sum.kind = ExprAst::Kind::Sum;
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
            ++pos_;
            sign = -1;
        }
        auto [c, t] = parse_term();
        sum.coeffs.push_back(c * sign);
        sum.children.push_back(std::move(t));
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            const int s = peek() == '+' ? 1 : -1;
            ++pos_;
            auto [c2, t2] = parse_term();
            sum.coeffs.push_back(c2 * s);
            sum.children.push_back(std::move(t2));
            skip_ws();
        }
        if (sum.children.size() == 1 && sum.coeffs[0] == 1) {
            return std::move(sum.children[0]);
        }
        return sum;
    }

    std::pair<Rat, ExprAst> parse_term() {
        skip_ws();
        Rat coef(1);
        std::vector<ExprAst> factors;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            const std::string num = scan_digits();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t den_at = pos_;
                const std::string den = scan_digits();
                Rat q(num + "/" + den);
                if (q.get_den() == 0) fail("zero denominator", den_at);
                q.canonicalize();
                coef = q;
                skip_ws();
                expect('*');
            } else if (peek() == '*') {
                ++pos_;
                coef = Rat(num);
            } else if (num == "1") {
                ExprAst one;
                one.kind = ExprAst::Kind::One;
                factors.push_back(std::move(one));
            } else if (num == "0") {
                ExprAst zero;
                zero.kind = ExprAst::Kind::Zero;
                factors.push_back(std::move(zero));
            } else {
                fail("expected '*' after coefficient", start);
            }
        }
        if (factors.empty()) factors.push_back(parse_factor());
        skip_ws();
        while (peek() == '^') {
            ++pos_;
            factors.push_back(parse_factor());
            skip_ws();
        }
        if (factors.size() == 1) return {coef, std::move(factors[0])};
        ExprAst wedge_node;
        wedge_node.kind = ExprAst::Kind::Wedge;
        wedge_node.children = std::move(factors);
        return {coef, std::move(wedge_node)};
    }

    ExprAst parse_factor() {
        skip_ws();
        const char c = peek();
        if (c == 'e') {
            ++pos_;
            ExprAst node;
            node.kind = ExprAst::Kind::SerialRef;
            node.serial = Nat(scan_digits(), 10);
            return node;
        }
        if (c == '{') {
            ++pos_;
            ExprAst node;
            node.kind = ExprAst::Kind::Assoc;
            node.children.push_back(parse_expr());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                node.children.push_back(parse_expr());
                skip_ws();
            }
            expect('}');
            return node;
        }
        if (c == '(') {
            ++pos_;
            ExprAst node;
            node.kind = ExprAst::Kind::Paren;
            node.children.push_back(parse_expr());
            skip_ws();
            expect(')');
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            const std::string num = scan_digits();
            ExprAst node;
            if (num == "1") {
                node.kind = ExprAst::Kind::One;
            } else if (num == "0") {
                node.kind = ExprAst::Kind::Zero;
            } else {
                fail("only '0' and '1' are numeric factors", start);
            }
            return node;
        }
        fail("expected a factor", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ExprAst parse(std::string_view text) { return Parser(text).run(); }

Element eval(const ExprAst& ast) {
    switch (ast.kind) {
    case ExprAst::Kind::Zero:
        return Element{};
    case ExprAst::Kind::One:
        return Element::unit();
    case ExprAst::Kind::SerialRef:
        return Element::from_serial(ast.serial);
    case ExprAst::Kind::Assoc: {
        Element acc = Element::unit();
        for (const ExprAst& item : ast.children) acc = wedge(acc, iota(eval(item)));
        return acc;
    }
    case ExprAst::Kind::Wedge: {
        Element acc = Element::unit();
        for (const ExprAst& f : ast.children) acc = wedge(acc, eval(f));
        return acc;
    }
    case ExprAst::Kind::Sum: {
        Element acc;
        for (std::size_t i = 0; i < ast.children.size(); ++i) {
            acc = acc + eval(ast.children[i]) * ast.coeffs[i];
        }
        return acc;
    }
    case ExprAst::Kind::Paren:
        return eval(ast.children.front());
    }
    throw Error("unreachable expression kind");
}

Element parse_element(std::string_view text) { return eval(parse(text)); }

std::string hfs_braces(const Hfs& x) {
    if (x.is_empty()) return "1";
    std::string out = "{";
    bool first = true;
    for (const Hfs& c : x.children()) {
        if (!first) out += ',';
        out += hfs_braces(c);
        first = false;
    }
    out += '}';
    return out;
}

namespace {

std::string monomial_text(const Monomial& m) {
    if (m.grade() == 0) return "1";
    std::string out = "{";
    bool first = true;
    for (const Hfs& f : m.factors()) {
        if (!first) out += ',';
        out += hfs_braces(f);
        first = false;
    }
    out += '}';
    return out;
}

} // namespace

std::string print_canonical(const Element& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        Rat mag = abs(c);
        if (mag != 1) {
            out += rat_str(mag);
            out += '*';
        }
        out += monomial_text(m);
        first = false;
    }
    return out;
}

} // namespace qset
