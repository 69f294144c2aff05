#include "qset/rational.hpp"

#include <cctype>

#include "qset/errors.hpp"

namespace qset {

Nat pow2(unsigned long e) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rat parse_rat(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_integer_text(den, false)) throw SyntaxError("malformed denominator", 0);
    }
    if (!is_integer_text(num, true)) throw SyntaxError("malformed rational", 0);
    Rat q(std::string(text), 10);
    if (q.get_den() == 0) throw SyntaxError("zero denominator", 0);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string nat_str(const Nat& n) { return n.get_str(); }

Nat parse_nat(std::string_view text) {
    if (!is_integer_text(text, false)) throw SyntaxError("malformed natural", 0);
    return Nat(std::string(text), 10);
}

} // namespace qset
