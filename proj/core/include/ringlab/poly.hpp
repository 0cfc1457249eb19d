#pragma once

#include <vector>

#include "ringlab/intmath.hpp"

namespace ringlab {

/// Dense little-endian integer polynomial: p[i] is the coefficient of x^i.
using IntPoly = std::vector<i64>;

int poly_degree(const IntPoly& f);
void poly_trim(IntPoly& f);
bool poly_is_zero(const IntPoly& f);

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Remainder of value modulo a monic integer polynomial f.
IntPoly poly_rem_monic(IntPoly value, const IntPoly& f);

i64 poly_eval(const IntPoly& f, i64 x); // exact, asserts on overflow at desk scale

// -- arithmetic in F_p[x] ---------------------------------------------------

IntPoly pmod(IntPoly f, i64 p);
IntPoly pmul(const IntPoly& a, const IntPoly& b, i64 p);
IntPoly padd(const IntPoly& a, const IntPoly& b, i64 p);
IntPoly psub(const IntPoly& a, const IntPoly& b, i64 p);
IntPoly pmonic(IntPoly f, i64 p);
/// Remainder of a modulo f over F_p (f need not be monic).
IntPoly prem(IntPoly a, const IntPoly& f, i64 p);
IntPoly pquot(IntPoly a, const IntPoly& f, i64 p);
IntPoly pgcd(IntPoly a, IntPoly b, i64 p); // monic gcd
IntPoly ppowmod(IntPoly base, unsigned __int128 exp, const IntPoly& f, i64 p);
IntPoly pderiv(const IntPoly& f, i64 p);

struct PolyFactor {
    IntPoly factor; // monic irreducible over F_p
    int multiplicity;
};

/// Complete factorization of a nonzero polynomial over F_p into monic
/// irreducibles (Cantor-Zassenhaus with a fixed internal seed, so the result
/// order is deterministic: sorted by (degree, coefficients)).
std::vector<PolyFactor> factor_mod_p(const IntPoly& f, i64 p);

bool irreducible_mod_p(const IntPoly& f, i64 p);

/// Trial-factorization irreducibility over Q for monic integer polynomials of
/// degree <= 4.
bool irreducible_over_Q(const IntPoly& f);

/// Dedekind's criterion: true iff p does not divide the index [O : Z[theta]]
/// for O the maximal order of Q[x]/(f).
bool dedekind_index_coprime(const IntPoly& f, i64 p);

} // namespace ringlab
