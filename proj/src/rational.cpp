#include "perdel/rational.hpp"

#include "perdel/error.hpp"

#include <cctype>
#include <limits>

namespace perdel {

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false)))
        throw InputError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Rational r;
    r.get_num() = Integer(n, 10);
    r.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    if (r.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Integer gcd_of_numerators(const std::vector<Rational>& values) {
    Integer g = 0;
    for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    return g;
}

std::int64_t to_int64(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t()) || sizeof(long) < sizeof(std::int64_t))
        throw Error("ArithmeticOverflow", "integer " + z.get_str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace perdel
