#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kmx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Domain-level failure (bad input, out-of-window, exceeded budget, ...).
/// The CLI maps these to exit code 1; malformed usage maps to exit code 2.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Out-of-window failures carry the smallest window depth that would work.
class out_of_window_error : public domain_error {
public:
    out_of_window_error(const std::string& what, int min_depth)
        : domain_error(what), min_depth_(min_depth) {}
    int min_depth() const { return min_depth_; }

private:
    int min_depth_;
};

/// C(n, k), zero whenever k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline std::string format_rat(const Rat& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parse "p" or "p/q" with optional leading sign. Throws domain_error on junk.
inline Rat parse_rat(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
        const Int num{std::string(s.substr(0, slash))};
        const Int den{std::string(s.substr(slash + 1))};
        if (den == 0) throw domain_error("zero denominator in rational: " + std::string(s));
        return Rat(num, den);
    } catch (const std::exception&) {
        throw domain_error("cannot parse rational: " + std::string(s));
    }
}

/// Exact integer extraction; throws if x has a denominator.
inline Int rat_to_int(const Rat& x) {
    if (boost::multiprecision::denominator(x) != 1)
        throw domain_error("expected an integer, got " + format_rat(x));
    return boost::multiprecision::numerator(x);
}

}  // namespace kmx
