#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockade {

// Exact rational arithmetic for all thresholds and widths. Quantities like
// eps^(10*d^2) underflow doubles long before the pipeline cares, so every
// comparison in this codebase goes through mpq.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    mpz_class num = base.get_num(), den = base.get_den();
    if (exp < 0) {
        if (num == 0) throw std::domain_error("rat_pow: zero to negative power");
        std::swap(num, den);
        exp = -exp;
    }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(exp));
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

// Exact square root; throws unless numerator and denominator are both
// perfect squares. Grid values are kept as even powers of the base ratio
// so this never fails on pipeline-internal inputs.
inline Rat rat_sqrt_exact(const Rat& q) {
    if (q < 0) throw std::domain_error("rat_sqrt_exact: negative");
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw std::domain_error("rat_sqrt_exact: not a perfect square: " + q.get_str());
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

inline bool rat_has_exact_sqrt(const Rat& q) {
    if (q < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

// floor/ceil to long; caller guarantees the value is in range.
inline long rat_floor(const Rat& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) throw std::overflow_error("rat_floor: out of range");
    return z.get_si();
}

inline long rat_ceil(const Rat& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p()) throw std::overflow_error("rat_ceil: out of range");
    return z.get_si();
}

// Clamped variants for loop bounds and caps: values beyond `cap` (e.g. 1/y
// for an astronomically small y) saturate instead of overflowing.
inline long rat_ceil_clamped(const Rat& q, long cap) {
    if (q > Rat(cap)) return cap;
    return rat_ceil(q);
}

inline long rat_floor_clamped(const Rat& q, long cap) {
    if (q > Rat(cap)) return cap;
    return rat_floor(q);
}

// Serialized form is always "num/den", canonicalized, e.g. "1/4", "3/1".
inline std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "num/den", a bare integer, or a plain decimal like "0.25"
// (converted exactly).
Rat rat_parse(const std::string& s);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace blockade
