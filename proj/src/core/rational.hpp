#ifndef HARDCORE_RATIONAL_HPP
#define HARDCORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hardcore {

/// Parses "p", "p/q" or a plain decimal ("0.25") into an exact rational.
/// Decimal digits are taken literally (base 10), never via binary floats.
mpq_class parse_rational(std::string_view text);

/// Exact rational for a finite double (doubles are binary rationals).
mpq_class rational_from_double(double x);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const mpq_class& q);

/// Accurate log of a positive rational via mantissa/exponent split.
double log_of(const mpq_class& q);
double log_of(const mpz_class& z);

struct Fugacity {
    mpq_class value;      ///< exact value; always the source of truth
    bool is_exact = true; ///< false when constructed from a double

    Fugacity() : value(1) {}
    Fugacity(const mpq_class& q) : value(q) {}
    static Fugacity from_double(double x) {
        Fugacity f;
        f.value = rational_from_double(x);
        f.is_exact = false;
        return f;
    }
    double as_double() const { return value.get_d(); }
};

} // namespace hardcore

#endif
