#include "grsobs/rational.hpp"

#include "grsobs/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace grsobs {

Rational make_rational(Int num, Int den) {
    if (den == 0) throw Error("compute", "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    std::size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos)
        throw Error("parse", "empty rational literal");
    std::string body = text.substr(begin, end - begin + 1);
    try {
        std::size_t slash = body.find('/');
        if (slash == std::string::npos) return Rational(Int(body));
        Int num(body.substr(0, slash));
        Int den(body.substr(slash + 1));
        if (den == 0) throw Error("parse", "zero denominator in '" + body + "'");
        return make_rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("parse", "bad rational literal '" + body + "'");
    }
}

Int floor_to_int(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Int ceil_to_int(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    Int q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

Int round_to_int(const Rational& r) {
    // floor(r + 1/2); halves round toward -inf.
    return floor_to_int(r + Rational(1, 2));
}

Int ceil_sqrt(const Rational& r) {
    if (r < 0) throw Error("compute", "ceil_sqrt of a negative value");
    if (r == 0) return 0;
    // sqrt(p/q) <= sqrt(ceil(p/q)); a ceiling on the integer suffices.
    Int bound = ceil_to_int(r);
    Int root = boost::multiprecision::sqrt(bound);  // floor sqrt
    if (root * root < bound) ++root;
    return root;
}

}  // namespace grsobs
