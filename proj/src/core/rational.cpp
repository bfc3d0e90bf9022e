#include "rational.hpp"

#include <cctype>
#include <cmath>

#include "errors.hpp"

namespace hardcore {

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw_parse("empty rational");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw_parse("malformed fraction '" + s + "'");
        try {
            mpq_class q{mpz_class(num), mpz_class(den)};
            if (q.get_den() == 0) throw_parse("zero denominator in '" + s + "'");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw_parse("malformed fraction '" + s + "'");
        }
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw_parse("malformed decimal '" + s + "'");
        for (size_t i = 0; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i])) &&
                !((digits[i] == '-' || digits[i] == '+') && i == 0))
                throw_parse("malformed decimal '" + s + "'");
        mpz_class den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        try {
            mpq_class q(mpz_class(digits), den);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw_parse("malformed decimal '" + s + "'");
        }
    }

    try {
        return mpq_class(mpz_class(s));
    } catch (const std::invalid_argument&) {
        throw_parse("malformed rational '" + s + "'");
    }
}

mpq_class rational_from_double(double x) {
    if (!std::isfinite(x)) throw_invalid("non-finite value has no rational form");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

std::string to_string(const mpq_class& q) {
    return q.get_str();
}

double log_of(const mpz_class& z) {
    if (z <= 0) throw_invalid("log of non-positive integer");
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(m) + static_cast<double>(exp2) * std::log(2.0);
}

double log_of(const mpq_class& q) {
    if (q <= 0) throw_invalid("log of non-positive rational");
    return log_of(mpz_class(q.get_num())) - log_of(mpz_class(q.get_den()));
}

} // namespace hardcore
