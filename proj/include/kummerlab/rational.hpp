#pragma once

// Exact rationals. GMP's mpq_class supplies the arithmetic; this header pins
// the text format used across the CLI: "num" when the denominator is 1,
// otherwise "num/den", always canonical.

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace kummerlab {

using Rat = mpq_class;

inline Rat make_rat(int64_t num, int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// Accepts "3", "-3", "num/den".
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rat(num);
        }
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

} // namespace kummerlab

// Field hooks for the generic polynomial / linear-algebra templates. They
// live in the global namespace because that is where gmpxx declares
// mpq_class, so argument-dependent lookup can see them from any context.
inline mpq_class field_zero(const mpq_class&) { return mpq_class(0); }
inline mpq_class field_one(const mpq_class&) { return mpq_class(1); }
inline bool is_zero(const mpq_class& a) { return a == 0; }
inline mpq_class inverse(const mpq_class& a) {
    if (a == 0) throw std::invalid_argument("division by zero in Q");
    return mpq_class(1) / a;
}
inline mpq_class small_scalar(const mpq_class&, uint64_t n) {
    return mpq_class(static_cast<unsigned long>(n));
}
