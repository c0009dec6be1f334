#include "rational.hpp"

#include "errors.hpp"

#include <cassert>
#include <cstdint>

namespace rshare {

namespace {

BigInt pow10(std::int64_t k) {
    assert(k >= 0);
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
}

// sign of p/q - 10^e, for p, q > 0
int compare_pow10(const BigInt& p, const BigInt& q, std::int64_t e) {
    if (e >= 0)
        return p.compare(BigInt(q * pow10(e)));
    return BigInt(p * pow10(-e)).compare(q);
}

} // namespace

std::string fraction_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view tok, std::string_view whole) {
    bool ok = !tok.empty();
    for (size_t i = 0; ok && i < tok.size(); ++i)
        ok = (tok[i] >= '0' && tok[i] <= '9') || (i == 0 && tok[i] == '-' && tok.size() > 1);
    if (!ok)
        throw InvalidInput("invalid rational: '" + std::string(whole) + "'");
    return BigInt(std::string(tok));
}

} // namespace

Rational parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    BigInt p = parse_integer(text.substr(0, slash), text);
    BigInt q = parse_integer(text.substr(slash + 1), text);
    if (q <= 0)
        throw InvalidInput("rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string decimal_str(const Rational& r, int significant_digits) {
    const int sig = significant_digits;
    if (sig < 1)
        throw InvalidInput("significant_digits must be >= 1");
    if (r == 0)
        return "0";

    const bool negative = r < 0;
    const BigInt p = boost::multiprecision::abs(numerator(r));
    const BigInt q = denominator(r);

    // Exponent e with 10^e <= p/q < 10^(e+1). The digit-count estimate is off
    // by at most one.
    std::int64_t e = static_cast<std::int64_t>(p.str().size()) -
                     static_cast<std::int64_t>(q.str().size());
    if (compare_pow10(p, q, e) < 0)
        --e;

    // Mantissa with `sig` digits, round half to even.
    std::int64_t shift = sig - 1 - e;
    BigInt num = p;
    BigInt den = q;
    if (shift >= 0)
        num *= pow10(shift);
    else
        den *= pow10(-shift);
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    const int half = BigInt(rem * 2).compare(den);
    if (half > 0 || (half == 0 && boost::multiprecision::bit_test(quot, 0)))
        ++quot;
    if (quot == pow10(sig)) { // rounding carried into a new leading digit
        quot = pow10(sig - 1);
        ++e;
    }

    std::string digits = quot.str();
    assert(static_cast<int>(digits.size()) == sig);

    std::string out;
    if (e >= sig) {
        out = digits + std::string(static_cast<size_t>(e) + 1 - sig, '0');
    } else if (e >= 0) {
        out = digits.substr(0, static_cast<size_t>(e) + 1);
        if (e + 1 < sig)
            out += "." + digits.substr(static_cast<size_t>(e) + 1);
    } else {
        out = "0." + std::string(static_cast<size_t>(-e) - 1, '0') + digits;
    }
    return negative ? "-" + out : out;
}

} // namespace rshare
