#include "blockade/rational.hpp"

#include "blockade/errors.hpp"

namespace blockade {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw parse_error("zero denominator in " + s);
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(mpz_class(s));
        // decimal: digits.digits -> exact fraction over a power of ten
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg) whole = whole.substr(1);
        if (whole.empty()) whole = "0";
        for (char c : whole + frac)
            if (c < '0' || c > '9') throw parse_error("bad rational: " + s);
        mpz_class den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpz_class num = mpz_class(whole) * den + (frac.empty() ? mpz_class(0) : mpz_class(frac));
        if (neg) num = -num;
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational: " + s);
    }
}

}  // namespace blockade
