#include "affex/rational.hpp"

#include <cctype>

#include "affex/error.hpp"

namespace affex {

Rational rational(long numerator, long denominator) {
    if (denominator == 0) throw Error("zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational rational_from_string(std::string_view text) {
    const auto fail = [&] {
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    };

    std::size_t i = 0;
    const auto digits = [&] {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
    };

    if (i < text.size() && text[i] == '-') ++i;
    digits();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        digits();
    }
    if (i != text.size()) fail();

    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) fail();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::string to_decimal_string(const Rational& value, int digits) {
    if (digits < 0) throw Error("negative digit count");

    mpz_class num = value.get_num();
    mpz_class den = value.get_den();
    const bool negative = num < 0;
    if (negative) num = -num;

    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    // floor(num * 10^d / den + 1/2): round half away from zero.
    mpz_class scaled = (num * pow10 * 2 + den) / (den * 2);

    mpz_class integral = scaled / pow10;
    mpz_class fractional = scaled % pow10;

    std::string out = integral.get_str();
    if (digits > 0) {
        std::string frac = fractional.get_str();
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    if (negative && scaled != 0) out.insert(0, "-");
    return out;
}

}  // namespace affex
