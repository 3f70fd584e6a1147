#include "geoset/rational.hpp"

#include <cctype>

#include "geoset/errors.hpp"

namespace geoset {

Rational make_rational(long num, long den) {
    if (den == 0) throw InvariantViolation("rational denominator is zero");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool valid_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-') {
        throw ParseError("invalid rational: '" + text + "'");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
        throw ParseError("invalid rational: '" + text + "'");
    }
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

int sign(const Rational& value) {
    return sgn(value);
}

long ceil_to_long(const Rational& value) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    if (!q.fits_slong_p()) throw InvariantViolation("ceil out of range");
    return q.get_si();
}

std::string to_decimal_string(const Rational& value, int digits) {
    mpz_class pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;

    const bool negative = sgn(value) < 0;
    Rational mag = negative ? Rational(-value) : value;
    // round(mag * 10^digits) with ties away from zero
    mpz_class scaled_num = mag.get_num() * pow10;
    mpz_class rounded;
    mpz_class twice = 2 * scaled_num + mag.get_den();
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * mag.get_den()).get_mpz_t());

    mpz_class ip, fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), rounded.get_mpz_t(), pow10.get_mpz_t());
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();

    std::string out = ip.get_str();
    if (!frac.empty()) out += "." + frac;
    if (negative && out != "0") out.insert(out.begin(), '-');
    return out;
}

}  // namespace geoset
