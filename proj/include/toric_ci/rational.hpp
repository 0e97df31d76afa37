#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric_ci {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Monomial exponent vector, one entry per ring variable.
using ExpVec = std::vector<unsigned>;

inline std::string to_string(const Int& z) { return z.get_str(); }

// Rationals are serialized as "p/q" (plain "p" when q == 1).
inline std::string to_string(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int ceil_rat(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

// Canonical residue in [0, m) for m > 0.
inline Int mod_canonical(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int parse_int(const std::string& s) {
    Int z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return z;
}

inline int sign_of(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace toric_ci
