#include "ringlab/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "ringlab/errors.hpp"

namespace ringlab {

int poly_degree(const IntPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[size_t(i)] != 0) return i;
    return -1;
}

void poly_trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool poly_is_zero(const IntPoly& f) { return poly_degree(f) < 0; }

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            i128 t = i128(a[i]) * b[j] + r[i + j];
            assert(t <= i128(INT64_MAX) && t >= i128(INT64_MIN));
            r[i + j] = i64(t);
        }
    }
    poly_trim(r);
    return r;
}

IntPoly poly_rem_monic(IntPoly value, const IntPoly& f) {
    int df = poly_degree(f);
    assert(df >= 0 && f[size_t(df)] == 1);
    poly_trim(value);
    while (poly_degree(value) >= df) {
        int dv = poly_degree(value);
        i64 lead = value[size_t(dv)];
        for (int i = 0; i <= df; ++i) {
            i128 t = i128(value[size_t(dv - df + i)]) - i128(lead) * f[size_t(i)];
            assert(t <= i128(INT64_MAX) && t >= i128(INT64_MIN));
            value[size_t(dv - df + i)] = i64(t);
        }
        poly_trim(value);
    }
    return value;
}

i64 poly_eval(const IntPoly& f, i64 x) {
    i128 acc = 0;
    for (int i = poly_degree(f); i >= 0; --i) {
        acc = acc * x + f[size_t(i)];
        assert(acc <= i128(INT64_MAX) && acc >= i128(INT64_MIN));
    }
    return i64(acc);
}

// -- F_p[x] -------------------------------------------------------------------

IntPoly pmod(IntPoly f, i64 p) {
    for (auto& c : f) c = mod_floor(c, p);
    poly_trim(f);
    return f;
}

IntPoly padd(const IntPoly& a, const IntPoly& b, i64 p) { return pmod(poly_add(a, b), p); }
IntPoly psub(const IntPoly& a, const IntPoly& b, i64 p) { return pmod(poly_sub(a, b), p); }

IntPoly pmul(const IntPoly& a, const IntPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = i64((i128(a[i]) * b[j] + r[i + j]) % p);
    }
    poly_trim(r);
    return r;
}

IntPoly pmonic(IntPoly f, i64 p) {
    f = pmod(std::move(f), p);
    int d = poly_degree(f);
    if (d < 0) return f;
    i64 inv = invmod(f[size_t(d)], p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

IntPoly prem(IntPoly a, const IntPoly& f, i64 p) {
    a = pmod(std::move(a), p);
    IntPoly g = pmod(f, p);
    int df = poly_degree(g);
    assert(df >= 0);
    i64 leadinv = invmod(g[size_t(df)], p);
    while (poly_degree(a) >= df) {
        int da = poly_degree(a);
        i64 c = mulmod(a[size_t(da)], leadinv, p);
        for (int i = 0; i <= df; ++i)
            a[size_t(da - df + i)] =
                mod_floor(a[size_t(da - df + i)] - mulmod(c, g[size_t(i)], p), p);
        poly_trim(a);
    }
    return a;
}

IntPoly pquot(IntPoly a, const IntPoly& f, i64 p) {
    a = pmod(std::move(a), p);
    IntPoly g = pmod(f, p);
    int df = poly_degree(g);
    assert(df >= 0);
    int da = poly_degree(a);
    if (da < df) return {};
    IntPoly q(size_t(da - df + 1), 0);
    i64 leadinv = invmod(g[size_t(df)], p);
    while ((da = poly_degree(a)) >= df) {
        i64 c = mulmod(a[size_t(da)], leadinv, p);
        q[size_t(da - df)] = c;
        for (int i = 0; i <= df; ++i)
            a[size_t(da - df + i)] =
                mod_floor(a[size_t(da - df + i)] - mulmod(c, g[size_t(i)], p), p);
        poly_trim(a);
    }
    return q;
}

IntPoly pgcd(IntPoly a, IntPoly b, i64 p) {
    a = pmod(std::move(a), p);
    b = pmod(std::move(b), p);
    while (!poly_is_zero(b)) {
        IntPoly r = prem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(std::move(a), p);
}

IntPoly ppowmod(IntPoly base, unsigned __int128 exp, const IntPoly& f, i64 p) {
    IntPoly r{1};
    base = prem(std::move(base), f, p);
    while (exp) {
        if (exp & 1) r = prem(pmul(r, base, p), f, p);
        base = prem(pmul(base, base, p), f, p);
        exp >>= 1;
    }
    return r;
}

IntPoly pderiv(const IntPoly& f, i64 p) {
    IntPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i64(i), p));
    return pmod(std::move(r), p);
}

namespace {

// p-th root of a polynomial in x^p over F_p (coefficients are fixed by
// Frobenius on the prime field).
IntPoly pth_root(const IntPoly& f, i64 p) {
    IntPoly r;
    for (size_t i = 0; i < f.size(); i += size_t(p)) r.push_back(f[i]);
    return r;
}

// f = prod g_i^{m_i} with the g_i squarefree and pairwise coprime.
void squarefree_decompose(const IntPoly& f, i64 p, int outer_mult,
                          std::vector<std::pair<IntPoly, int>>& out) {
    IntPoly fp = pderiv(f, p);
    if (poly_is_zero(fp)) {
        if (poly_degree(f) == 0) return;
        squarefree_decompose(pth_root(f, p), p, outer_mult * int(p), out);
        return;
    }
    IntPoly c = pgcd(f, fp, p);
    IntPoly w = pquot(f, c, p);
    int i = 1;
    while (poly_degree(w) > 0) {
        IntPoly y = pgcd(w, c, p);
        IntPoly z = pquot(w, y, p);
        if (poly_degree(z) > 0) out.emplace_back(pmonic(std::move(z), p), i * outer_mult);
        ++i;
        w = std::move(y);
        c = pquot(c, w, p);
    }
    if (poly_degree(c) > 0) squarefree_decompose(pth_root(c, p), p, outer_mult * int(p), out);
}

// Splits a squarefree product of irreducibles all of degree d.
void equal_degree_split(const IntPoly& f, int d, i64 p, std::mt19937_64& rng,
                        std::vector<IntPoly>& out) {
    int n = poly_degree(f);
    if (n == d) {
        out.push_back(pmonic(f, p));
        return;
    }
    unsigned __int128 pd = 1;
    for (int i = 0; i < d; ++i) pd *= (unsigned __int128)(p);
    while (true) {
        IntPoly a(size_t(n), 0);
        for (auto& c : a) c = i64(rng() % u64(p));
        poly_trim(a);
        if (poly_degree(a) < 1) continue;
        IntPoly g = pgcd(a, f, p);
        if (poly_degree(g) > 0 && poly_degree(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pquot(f, g, p), d, p, rng, out);
            return;
        }
        IntPoly b;
        if (p == 2) {
            // trace map a + a^2 + a^4 + ... over F_{2^d}
            b = a;
            IntPoly t = a;
            for (int i = 1; i < d; ++i) {
                t = prem(pmul(t, t, p), f, p);
                b = padd(b, t, p);
            }
        } else {
            b = ppowmod(a, (pd - 1) / 2, f, p);
            b = psub(b, IntPoly{1}, p);
        }
        g = pgcd(b, f, p);
        if (poly_degree(g) > 0 && poly_degree(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(pquot(f, g, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f, i64 p, std::mt19937_64& rng) {
    std::vector<IntPoly> out;
    IntPoly rest = pmonic(f, p);
    IntPoly h{0, 1}; // x
    int d = 0;
    while (poly_degree(rest) > 0) {
        ++d;
        if (2 * d > poly_degree(rest)) {
            out.push_back(rest); // what remains is irreducible
            break;
        }
        h = ppowmod(h, (unsigned __int128)(u64(p)), rest, p);
        IntPoly g = pgcd(psub(h, IntPoly{0, 1}, p), rest, p);
        if (poly_degree(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            rest = pquot(rest, g, p);
            h = prem(h, rest, p);
        }
    }
    return out;
}

} // namespace

std::vector<PolyFactor> factor_mod_p(const IntPoly& f, i64 p) {
    require(is_prime(p), Errc::BadConfig, "modulus is not prime");
    IntPoly g = pmod(f, p);
    require(!poly_is_zero(g), Errc::BadConfig, "cannot factor the zero polynomial");
    // fixed seed keyed off the input keeps results reproducible
    u64 seed = 0x9e3779b97f4a7c15ULL ^ u64(p);
    for (i64 c : g) seed = seed * 1099511628211ULL + u64(c + 7);
    std::mt19937_64 rng(seed);

    std::vector<std::pair<IntPoly, int>> sqf;
    squarefree_decompose(pmonic(g, p), p, 1, sqf);

    std::vector<PolyFactor> out;
    for (auto& [part, mult] : sqf)
        for (auto& irr : factor_squarefree(part, p, rng))
            out.push_back({irr, mult});
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
        return a.factor < b.factor;
    });
    return out;
}

bool irreducible_mod_p(const IntPoly& f, i64 p) {
    auto fs = factor_mod_p(f, p);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

namespace {

std::vector<i64> divisors_signed(i64 n) {
    n = std::llabs(n);
    std::vector<i64> out;
    for (i64 d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            if (d != n / d) {
                out.push_back(n / d);
                out.push_back(-n / d);
            }
        }
    return out;
}

bool perfect_square_root(i64 v, i64& root) {
    if (v < 0) return false;
    i64 r = i64(std::llround(std::sqrt(double(v))));
    for (i64 c = std::max<i64>(0, r - 2); c <= r + 2; ++c)
        if (c * c == v) {
            root = c;
            return true;
        }
    return false;
}

} // namespace

bool irreducible_over_Q(const IntPoly& f) {
    int d = poly_degree(f);
    require(d >= 1 && d <= 4 && f[size_t(d)] == 1, Errc::BadConfig,
            "expected a monic polynomial of degree 1..4");
    if (d == 1) return true;
    if (f[0] == 0) return false; // root at 0
    for (i64 r : divisors_signed(f[0]))
        if (poly_eval(f, r) == 0) return false;
    if (d < 4) return true;
    // monic quartic with no rational root: check (x^2+ax+b)(x^2+cx+d) splittings
    i64 e3 = f[3], e2 = f[2], e1 = f[1], e0 = f[0];
    for (i64 b : divisors_signed(e0)) {
        if (e0 % b != 0) continue;
        i64 dd = e0 / b;
        // a+c = e3, ac = e2-b-dd, ad+bc = e1
        i64 s = e3, prod = e2 - b - dd;
        i64 disc = s * s - 4 * prod, root;
        if (!perfect_square_root(disc, root)) continue;
        for (i64 a : {(s + root) / 2, (s - root) / 2}) {
            if ((s + root) % 2 != 0 && a == (s + root) / 2) continue;
            if ((s - root) % 2 != 0 && a == (s - root) / 2) continue;
            i64 c = s - a;
            if (a * c != prod) continue;
            if (a * dd + b * c == e1) return false;
        }
    }
    return true;
}

bool dedekind_index_coprime(const IntPoly& f, i64 p) {
    auto factors = factor_mod_p(f, p);
    IntPoly radical{1};
    for (auto& fac : factors) radical = pmul(radical, fac.factor, p);
    IntPoly hbar = pquot(pmod(f, p), radical, p);
    // integer lift with coefficients in [0, p)
    IntPoly gstar = radical, hstar = hbar;
    if (hstar.empty()) hstar = {1};
    IntPoly prod = poly_mul(gstar, hstar);
    IntPoly diff = poly_sub(prod, f);
    for (auto& c : diff) {
        assert(c % p == 0);
        c /= p;
    }
    IntPoly Fbar = pmod(diff, p);
    if (poly_is_zero(Fbar)) Fbar = {};
    IntPoly g1 = poly_is_zero(Fbar) ? radical : pgcd(Fbar, radical, p);
    IntPoly g2 = pgcd(g1, hbar, p);
    return poly_degree(g2) <= 0;
}

} // namespace ringlab
