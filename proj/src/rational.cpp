#include "braidops/rational.hpp"

#include <cctype>
#include <ostream>

#include "braidops/errors.hpp"

namespace braidops {

namespace {

bool valid_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(s, true)) throw ParseError("bad rational: '" + s + "'");
        return Rational(mpq_class(mpz_class(s)));
    }
    const std::string p = s.substr(0, slash);
    const std::string q = s.substr(slash + 1);
    if (!valid_integer_token(p, true) || !valid_integer_token(q, false))
        throw ParseError("bad rational: '" + s + "'");
    mpz_class den(q);
    if (den == 0) throw ParseError("bad rational (zero denominator): '" + s + "'");
    mpq_class v(mpz_class(p), den);
    v.canonicalize();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace braidops
