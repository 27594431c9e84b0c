#include "blowup/parser.hpp"

#include <cctype>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const PresentedRing& ring) : s_(s), ring_(ring) {}

    Poly parse() {
        skip_ws();
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input '" + rest() + "'", pos_);
        return p;
    }

private:
    const std::string& s_;
    const PresentedRing& ring_;
    std::size_t pos_ = 0;

    std::string rest() const { return s_.substr(pos_, 12); }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = accept('-') ? poly_neg(term(), fld()) : term();
        for (;;) {
            if (accept('+'))
                acc = poly_add(acc, term(), fld(), ord());
            else if (accept('-'))
                acc = poly_sub(acc, term(), fld(), ord());
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc = poly_mul(acc, factor(), fld(), ord());
        return acc;
    }

    Poly factor() {
        if (accept('-')) return poly_neg(factor(), fld());
        Poly b = base();
        if (accept('^')) {
            long e = uint_lit();
            Poly acc = poly_one(fld(), ring_.nvars());
            for (long k = 0; k < e; ++k) acc = poly_mul(acc, b, fld(), ord());
            return acc;
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of polynomial", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return ring_.constant(ring_.field().from_integer_string(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            int idx = ring_.var_index(name);
            if (idx < 0)
                throw ParseError("unknown variable '" + name + "' in ring " + ring_.describe(),
                                 pos_ - name.size());
            return ring_.var(idx);
        }
        if (c == '/') throw ParseError("division is not part of the polynomial grammar", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    long uint_lit() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("malformed exponent: expected a non-negative integer", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 100000) throw ParseError("exponent too large", pos_);
        }
        return v;
    }

    const Field& fld() const { return ring_.field(); }
    const MonomialOrder& ord() const { return ring_.grevlex(); }
};

bool scalar_is_negative_rational(const Field& fld, const Scalar& c) {
    if (fld.kind() != Field::Kind::rationals) return false;
    return std::get<mpq_class>(c) < 0;
}

std::string scalar_abs_str(const Field& fld, const Scalar& c) {
    if (fld.kind() != Field::Kind::rationals) return fld.str(c);
    mpq_class q = std::get<mpq_class>(c);
    if (q < 0) q = -q;
    return q.get_str();
}

}  // namespace

Poly parse_polynomial(const std::string& text, const PresentedRing& ring) {
    return PolyParser(text, ring).parse();
}

std::string print_monomial(const Monomial& m, const PresentedRing& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var_name(i);
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string print_polynomial(const Poly& f, const PresentedRing& ring) {
    if (f.is_zero()) return "0";
    const Field& fld = ring.field();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms) {
        bool neg = scalar_is_negative_rational(fld, t.c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = scalar_abs_str(fld, t.c);
        std::string ms = print_monomial(t.m, ring);
        if (ms == "1") {
            out += cs;
        } else if (cs == "1") {
            out += ms;
        } else {
            out += cs + "*" + ms;
        }
    }
    return out;
}

}  // namespace blowup
