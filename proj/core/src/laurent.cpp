#include "kmx/laurent.hpp"

#include <cctype>

namespace kmx {

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r = x;
    for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) r.add_term(ex + ey, cx * cy);
    return r;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& x) {
    LaurentPoly r;
    for (const auto& [e, v] : x.terms_) r.add_term(e, c * v);
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return Rat(-1) * *this; }

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e - 1, Rat(e) * c);
    return r;
}

LaurentPoly LaurentPoly::truncated(int lo, int hi) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        if (lo <= e && e <= hi) r.add_term(e, c);
    return r;
}

Rat residue_cocycle(const LaurentPoly& p, const LaurentPoly& q) {
    return (p.derivative() * q).coeff(-1);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rat mag = negative ? Rat(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        const bool unit = mag == 1;
        if (e == 0) {
            out += format_rat(mag);
        } else {
            if (!unit) out += format_rat(mag) + "*";
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view s) {
    LaurentPoly out;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw domain_error("empty polynomial");
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw domain_error("expected '+' or '-' in polynomial: " + std::string(s));
        }
        first = false;
        skip_ws();

        // optional rational coefficient
        Rat coeff = 1;
        bool saw_coeff = false;
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (i > start) {
            coeff = parse_rat(s.substr(start, i - start));
            saw_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }

        int exponent = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t es = i;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es) throw domain_error("missing exponent: " + std::string(s));
                exponent = std::stoi(std::string(s.substr(es, i - es)));
            }
        } else if (!saw_coeff) {
            throw domain_error("expected coefficient or 't': " + std::string(s));
        }
        out.add_term(exponent, sign * coeff);
        skip_ws();
    }
    return out;
}

}  // namespace kmx
