#pragma once

#include <map>
#include <string>
#include <string_view>

#include "kmx/numeric.hpp"

namespace kmx {

/// Laurent polynomial over the rationals; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exponent, Rat coeff) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
        return p;
    }
    static LaurentPoly constant(Rat c) { return monomial(0, std::move(c)); }

    /// Grammar: terms joined by +/-, term = [rational][['*']'t'['^'int]],
    /// e.g. "t^-1+2", "3/2", "t^2-5t", "1/2*t^3".
    static LaurentPoly parse(std::string_view s);

    const std::map<int, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    int min_exponent() const;  // throws on zero
    int max_exponent() const;  // throws on zero

    LaurentPoly& add_term(int exponent, const Rat& c) {
        if (c == 0) return *this;
        auto [it, fresh] = terms_.emplace(exponent, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& x);
    LaurentPoly operator-() const;

    LaurentPoly derivative() const;
    /// Drop terms with exponent outside [lo, hi].
    LaurentPoly truncated(int lo, int hi) const;

    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;

private:
    std::map<int, Rat> terms_;
};

/// Coefficient of t^{-1} in P' Q (the 2-cocycle scalar of the bracket).
Rat residue_cocycle(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace kmx
