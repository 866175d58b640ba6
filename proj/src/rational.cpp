#include "exactform/rational.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace exactform {

bool fits_int64(const Integer& n) {
    return n >= std::numeric_limits<std::int64_t>::min() &&
           n <= std::numeric_limits<std::int64_t>::max();
}

Rational pow_rational(const Rational& base, std::int64_t exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0 && base == 0) throw std::invalid_argument("pow_rational: 0 to a negative power");
    const auto mag = static_cast<unsigned>(exp < 0 ? -exp : exp);
    Integer num = boost::multiprecision::pow(numerator(base), mag);
    Integer den = boost::multiprecision::pow(denominator(base), mag);
    if (exp < 0) {
        num.swap(den);
        // cpp_rational rejects negative denominators outright.
        if (den < 0) { num = -num; den = -den; }
    }
    return Rational(num, den);
}

double to_double(const Rational& q) {
    return q.template convert_to<double>();
}

std::string to_string(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

} // namespace exactform
