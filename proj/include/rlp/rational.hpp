#ifndef RLP_RATIONAL_HPP
#define RLP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "rlp/errors.hpp"

namespace rlp {

// All scalar arithmetic in the library is exact. BigInt/Rat are kept in
// canonical form by boost (gcd(num, den) = 1, den > 0, zero is 0/1).
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rat& r) { return boost::multiprecision::denominator(r); }

/// p/q with any sign of q; boost's checked constructor wants q > 0.
inline Rat make_rat(BigInt p, BigInt q) {
    if (q.is_zero()) throw Error("make_rat: zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rat(p, q);
}

inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

/// base^e for integer base and e >= 0, with 0^0 = 1.
inline BigInt ipow(const BigInt& base, long e) {
    if (e < 0) throw Error("ipow: negative exponent");
    BigInt result(1), b(base);
    long k = e;
    while (k > 0) {
        if (k & 1) result *= b;
        b *= b;
        k >>= 1;
    }
    return result;
}

/// base^e for rational base and any integer e, with 0^0 = 1.
/// Raising zero to a negative power throws ZeroBase.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base.is_zero()) {
        if (e > 0) return Rat(0);
        throw ZeroBase("rat_pow: 0 raised to negative power");
    }
    if (e > 0) return make_rat(ipow(numer(base), e), ipow(denom(base), e));
    return make_rat(ipow(denom(base), -e), ipow(numer(base), -e));
}

/// Parses "p/q" or "p". Whitespace is not accepted.
inline Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
        BigInt p{std::string(s.substr(0, slash))};
        BigInt q{std::string(s.substr(slash + 1))};
        if (q.is_zero()) throw ParseError("parse_rat: zero denominator");
        return make_rat(std::move(p), std::move(q));
    } catch (const std::runtime_error& e) {
        throw ParseError("parse_rat: bad rational '" + std::string(s) + "'");
    }
}

/// Decimal-free rendering: "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numer(r).str();
    if (denom(r) != 1) s += "/" + denom(r).str();
    return s;
}

inline BigInt vec_gcd(const std::vector<BigInt>& v) {
    BigInt g(0);
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

/// (|K| choose K) for a composition K of nonnegative integers.
inline BigInt multinomial(const std::vector<int>& comp) {
    long total = 0;
    BigInt result(1);
    for (int k : comp) {
        total += k;
        result *= binomial(total, k);
    }
    return result;
}

}  // namespace rlp

#endif  // RLP_RATIONAL_HPP
