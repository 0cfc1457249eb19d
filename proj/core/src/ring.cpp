#include "ringlab/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

void col_addmul(IMat& A, int dst, int src, i64 c) {
    for (int r = 0; r < A.rows; ++r) {
        i128 t = i128(A.at(r, dst)) + i128(c) * A.at(r, src);
        assert(t <= i128(INT64_MAX) && t >= i128(INT64_MIN));
        A.at(r, dst) = i64(t);
    }
}

void col_swap(IMat& A, int i, int j) {
    for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
}

// Lower-triangular column basis (positive diagonal) of the full-rank lattice
// spanned by the columns of A.
IMat hnf_basis(const IMat& A) {
    IMat W = A;
    int d = W.rows;
    for (int r = 0; r < d; ++r) {
        while (true) {
            int best = -1;
            for (int j = r; j < W.cols; ++j)
                if (W.at(r, j) != 0 && (best < 0 || std::llabs(W.at(r, j)) < std::llabs(W.at(r, best))))
                    best = j;
            require(best >= 0, Errc::Internal, "ideal lattice is not of full rank");
            col_swap(W, r, best);
            bool clean = true;
            for (int j = r + 1; j < W.cols; ++j) {
                if (W.at(r, j) == 0) continue;
                col_addmul(W, j, r, -(W.at(r, j) / W.at(r, r)));
                if (W.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (W.at(r, r) < 0)
            for (int i = 0; i < d; ++i) W.at(i, r) = -W.at(i, r);
    }
    IMat B(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) B.at(r, c) = W.at(r, c);
    return B;
}

bool lattice_contains(const IMat& B, std::vector<i64> x) {
    int d = B.rows;
    for (int r = 0; r < d; ++r) {
        if (x[size_t(r)] % B.at(r, r) != 0) return false;
        i64 t = x[size_t(r)] / B.at(r, r);
        for (int i = r; i < d; ++i) {
            i128 v = i128(x[size_t(i)]) - i128(t) * B.at(i, r);
            assert(v <= i128(INT64_MAX) && v >= i128(INT64_MIN));
            x[size_t(i)] = i64(v);
        }
    }
    return true;
}

IntPoly col_poly(const IMat& A, int c) {
    IntPoly v(size_t(A.rows));
    for (int r = 0; r < A.rows; ++r) v[size_t(r)] = A.at(r, c);
    poly_trim(v);
    return v;
}

void push_col(IMat& A, int c, const IntPoly& v) {
    for (int r = 0; r < A.rows; ++r)
        A.at(r, c) = size_t(r) < v.size() ? v[size_t(r)] : 0;
}

// span of pairwise products of the columns, reduced mod f
IMat lattice_product(const IMat& L1, const IMat& L2, const IntPoly& f) {
    int d = L1.rows;
    IMat gens(d, L1.cols * L2.cols);
    int c = 0;
    for (int i = 0; i < L1.cols; ++i)
        for (int j = 0; j < L2.cols; ++j)
            push_col(gens, c++, poly_rem_monic(poly_mul(col_poly(L1, i), col_poly(L2, j)), f));
    return hnf_basis(gens);
}

IMat prime_lattice(const PrimeIdealSpec& prime, const IntPoly& f) {
    int d = poly_degree(f);
    IMat gens(d, 2 * d);
    int c = 0;
    for (int j = 0; j < d; ++j) {
        IntPoly v(size_t(j + 1), 0);
        v[size_t(j)] = prime.p;
        push_col(gens, c++, v);
    }
    for (int j = 0; j < d; ++j) {
        IntPoly xj(size_t(j + 1), 0);
        xj[size_t(j)] = 1;
        push_col(gens, c++, poly_rem_monic(poly_mul(prime.g, xj), f));
    }
    return hnf_basis(gens);
}

i64 diag_product(const IMat& B) {
    i64 p = 1;
    for (int i = 0; i < B.rows; ++i) p *= B.at(i, i);
    return p;
}

} // namespace

RingPtr QuotientRing::build(const NumberFieldSpec& field, IdealDescriptor modulus, u64 capacity) {
    field.validate();
    require(!modulus.factors.empty(), Errc::BadConfig, "modulus has no prime factors");

    // canonicalize every factor against the actual factorization of (p)
    for (auto& fac : modulus.factors) {
        require(fac.exponent >= 1, Errc::BadConfig, "ideal exponent must be >= 1");
        auto primes = factor_rational_prime(field, fac.prime.p);
        bool matched = false;
        for (const auto& cand : primes) {
            if (pmod(fac.prime.g, fac.prime.p) == cand.g) {
                fac.prime = cand;
                matched = true;
                break;
            }
        }
        require(matched, Errc::BadConfig, "declared prime ideal does not divide (p)");
    }
    for (size_t i = 0; i < modulus.factors.size(); ++i)
        for (size_t j = i + 1; j < modulus.factors.size(); ++j)
            require(modulus.factors[i].prime.p != modulus.factors[j].prime.p ||
                        modulus.factors[i].prime.g != modulus.factors[j].prime.g,
                    Errc::BadConfig, "repeated prime ideal in modulus");

    u64 q = modulus.norm();
    require(q <= capacity, Errc::CapacityExceeded,
            "|O/a| = " + std::to_string(q) + " exceeds capacity " + std::to_string(capacity));

    auto ring = std::shared_ptr<QuotientRing>(new QuotientRing());
    ring->field_ = field;
    ring->modulus_ = std::move(modulus);
    ring->capacity_ = capacity;
    ring->q_ = q;
    ring->d_ = field.degree();
    ring->init_tables();
    return ring;
}

RingPtr QuotientRing::integers_mod(i64 p, int n, u64 capacity) {
    const auto& f = builtin_field("rational");
    auto primes = factor_rational_prime(f, p);
    IdealDescriptor ideal;
    ideal.factors.push_back({primes.at(0), n});
    return build(f, ideal, capacity);
}

void QuotientRing::init_tables() {
    const IntPoly& f = field_.min_poly;
    int d = d_;

    // full modulus lattice + per-component prime-power chains
    std::vector<std::vector<IMat>> chains; // chains[i][m] = P_i^m lattice, m = 0..n_i
    IMat full = IMat::identity(d);
    for (const auto& fac : modulus_.factors) {
        std::vector<IMat> chain;
        chain.push_back(IMat::identity(d));
        IMat base = prime_lattice(fac.prime, f);
        chain.push_back(base);
        for (int m = 2; m <= fac.exponent; ++m)
            chain.push_back(lattice_product(chain.back(), base, f));
        full = lattice_product(full, chain[size_t(fac.exponent)], f);
        chains.push_back(std::move(chain));
    }
    require(u64(diag_product(full)) == q_, Errc::Internal, "lattice covolume mismatch");

    // invariant-factor decomposition of Z^d / full
    SmithForm snf = smith_form(full);
    umat_ = snf.U;
    uinv_ = snf.Uinv;
    for (int i = 0; i < d; ++i)
        if (snf.invariants[size_t(i)] > 1) {
            kept_rows_.push_back(i);
            orders_.push_back(snf.invariants[size_t(i)]);
        }
    rank_ = int(kept_rows_.size());
    require(rank_ >= 1, Errc::Internal, "trivial quotient");
    char_ = orders_.back();
    strides_.assign(size_t(rank_), 1);
    for (int i = 1; i < rank_; ++i) strides_[size_t(i)] = strides_[size_t(i - 1)] * orders_[size_t(i - 1)];
    u64 qq = 1;
    for (i64 m : orders_) qq *= u64(m);
    require(qq == q_, Errc::Internal, "invariant factors do not multiply to q");

    // decode table
    coords_.resize(size_t(q_) * size_t(rank_));
    for (u64 e = 0; e < q_; ++e) {
        u64 rest = e;
        for (int i = 0; i < rank_; ++i) {
            coords_[size_t(e) * size_t(rank_) + size_t(i)] = i64(rest % u64(orders_[size_t(i)]));
            rest /= u64(orders_[size_t(i)]);
        }
    }

    // structure constants on the invariant basis
    std::vector<std::vector<i64>> basis_lifts(size_t(rank_));
    for (int i = 0; i < rank_; ++i) {
        std::vector<i64> c(size_t(rank_), 0);
        c[size_t(i)] = 1;
        std::vector<i64> w(size_t(d), 0);
        w[size_t(kept_rows_[size_t(i)])] = 1;
        std::vector<i64> lift(size_t(d), 0);
        for (int r = 0; r < d; ++r) {
            i128 acc = 0;
            for (int j = 0; j < d; ++j) acc += i128(uinv_.at(r, j)) * w[size_t(j)];
            lift[size_t(r)] = mod_floor(i64(acc % i128(char_)), char_);
        }
        basis_lifts[size_t(i)] = lift;
    }
    mul_table_.assign(size_t(rank_) * size_t(rank_), {});
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            IntPoly a(basis_lifts[size_t(i)].begin(), basis_lifts[size_t(i)].end());
            IntPoly b(basis_lifts[size_t(j)].begin(), basis_lifts[size_t(j)].end());
            poly_trim(a);
            poly_trim(b);
            IntPoly prod = poly_rem_monic(poly_mul(a, b), f);
            prod.resize(size_t(d), 0);
            std::vector<i64> c(size_t(rank_));
            for (int r = 0; r < rank_; ++r) {
                i128 acc = 0;
                for (int jj = 0; jj < d; ++jj)
                    acc += i128(umat_.at(kept_rows_[size_t(r)], jj)) * prod[size_t(jj)];
                c[size_t(r)] = mod_floor(i64(acc % i128(orders_[size_t(r)])), orders_[size_t(r)]);
            }
            mul_table_[size_t(i) * size_t(rank_) + size_t(j)] = std::move(c);
        }

    std::vector<i64> onev(size_t(d), 0);
    onev[0] = 1;
    one_ = from_power_basis(onev);

    unit_count_ = 1;
    for (const auto& fac : modulus_.factors) {
        u64 pd = fac.prime.residue_size();
        unit_count_ *= ipow(pd, unsigned(fac.exponent)) - ipow(pd, unsigned(fac.exponent - 1));
    }

    if (is_local()) {
        int n = modulus_.factors[0].exponent;
        const auto& chain = chains[0];
        // member lists of P^m via additive closure of the lattice columns
        ideal_members_.resize(size_t(n) + 1);
        for (int m = 0; m <= n; ++m) {
            std::vector<elem_t> gens;
            for (int c = 0; c < d; ++c) {
                IntPoly v = col_poly(chain[size_t(m)], c);
                v.resize(size_t(d), 0);
                gens.push_back(from_power_basis(std::vector<i64>(v.begin(), v.end())));
            }
            ideal_members_[size_t(m)] = additive_closure(gens);
        }
        val_.assign(size_t(q_), 0);
        for (int m = 1; m <= n; ++m)
            for (elem_t e : ideal_members_[size_t(m)]) val_[e] = std::uint8_t(m);
        for (elem_t e : ideal_members_[size_t(n)])
            require(e == 0, Errc::Internal, "P^n contains a nonzero element");
        for (elem_t e = 0; e < q_; ++e)
            if (val_[e] == 1) {
                uniformizer_ = e;
                break;
            }
        require(n == 0 || valuation(uniformizer_) == 1, Errc::Internal, "no uniformizer found");
    }
}

std::string QuotientRing::describe() const {
    std::ostringstream os;
    os << field_.label << "/";
    bool first = true;
    for (const auto& fac : modulus_.factors) {
        if (!first) os << "*";
        first = false;
        os << "P" << fac.prime.p;
        if (fac.prime.d0 > 1) os << "d" << fac.prime.d0;
        if (fac.prime.e > 1) os << "e" << fac.prime.e;
        auto all = factor_rational_prime(field_, fac.prime.p);
        if (all.size() > 1) {
            for (size_t i = 0; i < all.size(); ++i)
                if (all[i].g == fac.prime.g) os << "_" << i;
        }
        if (fac.exponent > 1) os << "^" << fac.exponent;
    }
    os << " (q=" << q_ << ")";
    return os.str();
}

int QuotientRing::exponent() const {
    require(is_local(), Errc::NotLocalRing, "composite modulus");
    return modulus_.factors[0].exponent;
}
int QuotientRing::ramification() const {
    require(is_local(), Errc::NotLocalRing, "composite modulus");
    return modulus_.factors[0].prime.e;
}
int QuotientRing::residue_degree() const {
    require(is_local(), Errc::NotLocalRing, "composite modulus");
    return modulus_.factors[0].prime.d0;
}
i64 QuotientRing::residue_char() const {
    require(is_local(), Errc::NotLocalRing, "composite modulus");
    return modulus_.factors[0].prime.p;
}

elem_t QuotientRing::add(elem_t a, elem_t b) const {
    if (rank_ == 1) {
        u64 s = u64(a) + u64(b);
        return elem_t(s >= q_ ? s - q_ : s);
    }
    const i64* ca = &coords_[size_t(a) * size_t(rank_)];
    const i64* cb = &coords_[size_t(b) * size_t(rank_)];
    u64 idx = 0;
    for (int i = 0; i < rank_; ++i) {
        i64 s = ca[i] + cb[i];
        if (s >= orders_[size_t(i)]) s -= orders_[size_t(i)];
        idx += u64(s) * u64(strides_[size_t(i)]);
    }
    return elem_t(idx);
}

elem_t QuotientRing::neg(elem_t a) const {
    if (rank_ == 1) return a == 0 ? 0 : elem_t(q_ - a);
    const i64* ca = &coords_[size_t(a) * size_t(rank_)];
    u64 idx = 0;
    for (int i = 0; i < rank_; ++i) {
        i64 s = ca[i] == 0 ? 0 : orders_[size_t(i)] - ca[i];
        idx += u64(s) * u64(strides_[size_t(i)]);
    }
    return elem_t(idx);
}

elem_t QuotientRing::sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

elem_t QuotientRing::mul(elem_t a, elem_t b) const {
    if (rank_ == 1) return elem_t((u64)mulmod(i64(a), i64(b), i64(q_)));
    const i64* ca = &coords_[size_t(a) * size_t(rank_)];
    const i64* cb = &coords_[size_t(b) * size_t(rank_)];
    i128 acc[4] = {0, 0, 0, 0};
    for (int i = 0; i < rank_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) {
            if (cb[j] == 0) continue;
            i128 w = i128(ca[i]) * cb[j];
            const auto& t = mul_table_[size_t(i) * size_t(rank_) + size_t(j)];
            for (int r = 0; r < rank_; ++r) acc[r] += w * t[size_t(r)];
        }
    }
    u64 idx = 0;
    for (int r = 0; r < rank_; ++r) {
        i64 c = i64(acc[r] % i128(orders_[size_t(r)]));
        if (c < 0) c += orders_[size_t(r)];
        idx += u64(c) * u64(strides_[size_t(r)]);
    }
    return elem_t(idx);
}

elem_t QuotientRing::pow(elem_t a, u64 e) const {
    elem_t r = one_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

elem_t QuotientRing::scale(i64 c, elem_t a) const {
    const i64* ca = &coords_[size_t(a) * size_t(rank_)];
    u64 idx = 0;
    for (int i = 0; i < rank_; ++i) {
        i64 s = mod_floor(i64(i128(c) % i128(orders_[size_t(i)]) * ca[i] % i128(orders_[size_t(i)])),
                          orders_[size_t(i)]);
        idx += u64(s) * u64(strides_[size_t(i)]);
    }
    return elem_t(idx);
}

elem_t QuotientRing::from_int(i64 v) const { return scale(v, one_); }

RingElement QuotientRing::coords_of(elem_t e) const {
    RingElement r;
    r.coords.assign(&coords_[size_t(e) * size_t(rank_)], &coords_[size_t(e) * size_t(rank_)] + rank_);
    return r;
}

elem_t QuotientRing::from_coords(const std::vector<i64>& c) const {
    require(c.size() == size_t(rank_), Errc::BadConfig, "coordinate vector has wrong length");
    u64 idx = 0;
    for (int i = 0; i < rank_; ++i) idx += u64(mod_floor(c[size_t(i)], orders_[size_t(i)])) * u64(strides_[size_t(i)]);
    return elem_t(idx);
}

elem_t QuotientRing::from_power_basis(const std::vector<i64>& v) const {
    require(v.size() <= size_t(d_), Errc::BadConfig, "power-basis vector too long");
    u64 idx = 0;
    for (int i = 0; i < rank_; ++i) {
        i128 acc = 0;
        for (int j = 0; j < d_ && size_t(j) < v.size(); ++j)
            acc += i128(umat_.at(kept_rows_[size_t(i)], j)) * (v[size_t(j)] % char_);
        idx += u64(mod_floor(i64(acc % i128(orders_[size_t(i)])), orders_[size_t(i)])) *
               u64(strides_[size_t(i)]);
    }
    return elem_t(idx);
}

std::vector<i64> QuotientRing::to_power_basis(elem_t e) const {
    std::vector<i64> w(size_t(d_), 0);
    for (int i = 0; i < rank_; ++i) w[size_t(kept_rows_[size_t(i)])] = coord(e, i);
    std::vector<i64> lift(size_t(d_), 0);
    for (int r = 0; r < d_; ++r) {
        i128 acc = 0;
        for (int j = 0; j < d_; ++j) acc += i128(uinv_.at(r, j)) * w[size_t(j)];
        lift[size_t(r)] = mod_floor(i64(acc % i128(char_)), char_);
    }
    return lift;
}

bool QuotientRing::is_unit(elem_t e) const {
    if (is_local()) return val_[e] == 0;
    for (size_t i = 0; i < component_count(); ++i)
        if (!component_ring(i)->is_unit(project_component(i, e))) return false;
    return true;
}

const std::vector<elem_t>& QuotientRing::unit_list() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!units_built_) {
        std::vector<elem_t>& out = units_;
        if (is_local()) {
            for (elem_t e = 0; e < q_; ++e)
                if (val_[e] == 0) out.push_back(e);
        } else {
            ensure_crt();
            for (elem_t e = 0; e < q_; ++e) {
                bool u = true;
                for (size_t i = 0; i < components_.size() && u; ++i)
                    u = components_[i]->is_unit(component_proj_[i][e]);
                if (u) out.push_back(e);
            }
        }
        require(out.size() == unit_count_, Errc::Internal, "unit count mismatch");
        units_built_ = true;
    }
    return units_;
}

std::vector<elem_t> QuotientRing::units() const { return unit_list(); }

elem_t QuotientRing::inverse(elem_t e) const {
    require(is_unit(e), Errc::BadConfig, "element is not a unit");
    return pow(e, unit_count_ - 1);
}

int QuotientRing::valuation(elem_t e) const {
    require(is_local(), Errc::NotLocalRing, "valuation needs a prime-power modulus");
    return int(val_[e]);
}

elem_t QuotientRing::uniformizer() const {
    require(is_local(), Errc::NotLocalRing, "uniformizer needs a prime-power modulus");
    return uniformizer_;
}

const std::vector<elem_t>& QuotientRing::ideal_power_members(int m) const {
    require(is_local(), Errc::NotLocalRing, "ideal chain needs a prime-power modulus");
    require(m >= 0 && m <= exponent(), Errc::BadConfig, "ideal power out of range");
    return ideal_members_[size_t(m)];
}

bool QuotientRing::in_ideal_power(elem_t e, int m) const {
    require(is_local(), Errc::NotLocalRing, "ideal chain needs a prime-power modulus");
    return int(val_[e]) >= std::min(m, exponent());
}

RingPtr QuotientRing::reduced(int m) const {
    int n = exponent();
    require(m >= 1 && m <= n, Errc::BadConfig, "reduction level out of range");
    if (m == n) return shared_from_this();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = tower_.find(m);
    if (it != tower_.end()) return it->second;
    IdealDescriptor ideal = modulus_;
    ideal.factors[0].exponent = m;
    RingPtr r = build(field_, ideal, capacity_);
    tower_[m] = r;
    return r;
}

elem_t QuotientRing::project(const QuotientRing& target, elem_t e) const {
    return target.from_power_basis(to_power_basis(e));
}

elem_t QuotientRing::times_uniformizer_power(const QuotientRing& small, elem_t y, int i) const {
    elem_t lifted = from_power_basis(small.to_power_basis(y));
    return mul(pow(uniformizer(), u64(i)), lifted);
}

elem_t QuotientRing::divide_uniformizer_power(elem_t x, int i) const {
    int n = exponent();
    require(i >= 0 && i < n, Errc::BadConfig, "division exponent out of range");
    require(int(val_[x]) >= i, Errc::BadConfig, "element is not divisible by p^i");
    if (i == 0) return x;
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = divided_sections_.find(i);
    if (it == divided_sections_.end()) {
        RingPtr small;
        {
            // reduced() takes the same lock; build inline
            auto found = tower_.find(n - i);
            if (found != tower_.end()) {
                small = found->second;
            } else {
                IdealDescriptor ideal = modulus_;
                ideal.factors[0].exponent = n - i;
                small = build(field_, ideal, capacity_);
                tower_[n - i] = small;
            }
        }
        std::vector<elem_t> table(size_t(q_), elem_t(q_));
        for (elem_t y = 0; y < small->size(); ++y)
            table[times_uniformizer_power(*small, y, i)] = y;
        it = divided_sections_.emplace(i, std::move(table)).first;
    }
    elem_t y = it->second[x];
    require(y != elem_t(q_), Errc::Internal, "divided-power section miss");
    return y;
}

void QuotientRing::ensure_crt() const {
    if (!components_.empty()) return;
    std::vector<RingPtr> comps;
    std::vector<std::vector<elem_t>> proj;
    for (const auto& fac : modulus_.factors) {
        IdealDescriptor ideal;
        ideal.factors.push_back(fac);
        comps.push_back(build(field_, ideal, capacity_));
    }
    proj.resize(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) {
        proj[i].resize(size_t(q_));
        for (elem_t e = 0; e < q_; ++e) proj[i][e] = project(*comps[i], e);
    }
    std::vector<u64> strides(comps.size(), 1);
    for (size_t i = 1; i < comps.size(); ++i) strides[i] = strides[i - 1] * comps[i - 1]->size();
    std::vector<elem_t> backward(size_t(q_), elem_t(q_));
    for (elem_t e = 0; e < q_; ++e) {
        u64 key = 0;
        for (size_t i = 0; i < comps.size(); ++i) key += u64(proj[i][e]) * strides[i];
        require(backward[key] == elem_t(q_), Errc::Internal, "CRT projection is not injective");
        backward[key] = e;
    }
    components_ = std::move(comps);
    component_proj_ = std::move(proj);
    crt_backward_ = std::move(backward);
}

RingPtr QuotientRing::component_ring(size_t i) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    ensure_crt();
    return components_.at(i);
}

elem_t QuotientRing::project_component(size_t i, elem_t e) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    ensure_crt();
    return component_proj_.at(i)[e];
}

elem_t QuotientRing::crt_recombine(const std::vector<elem_t>& parts) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    ensure_crt();
    require(parts.size() == components_.size(), Errc::BadConfig, "component tuple has wrong arity");
    u64 key = 0, stride = 1;
    for (size_t i = 0; i < components_.size(); ++i) {
        require(parts[i] < components_[i]->size(), Errc::BadConfig, "component element out of range");
        key += u64(parts[i]) * stride;
        stride *= components_[i]->size();
    }
    return crt_backward_[key];
}

RingPtr QuotientRing::prefix_ring(size_t s) const {
    require(s >= 1 && s <= component_count(), Errc::BadConfig, "prefix length out of range");
    if (s == component_count()) return shared_from_this();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = prefixes_.find(s);
    if (it == prefixes_.end()) {
        IdealDescriptor ideal;
        for (size_t i = 0; i < s; ++i) ideal.factors.push_back(modulus_.factors[i]);
        RingPtr r = build(field_, ideal, capacity_);
        std::vector<elem_t> table(size_t(q_));
        for (elem_t e = 0; e < q_; ++e) table[e] = project(*r, e);
        it = prefixes_.emplace(s, std::make_pair(r, std::move(table))).first;
    }
    return it->second.first;
}

elem_t QuotientRing::project_prefix(size_t s, elem_t e) const {
    if (s == component_count()) return e;
    prefix_ring(s);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return prefixes_.at(s).second[e];
}

std::vector<elem_t> QuotientRing::additive_closure(const std::vector<elem_t>& gens) const {
    std::vector<bool> seen(size_t(q_), false);
    std::vector<elem_t> stack{0}, out;
    seen[0] = true;
    while (!stack.empty()) {
        elem_t x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (elem_t g : gens) {
            elem_t y = add(x, g);
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 QuotientRing::additive_index(const std::vector<elem_t>& gens) const {
    u64 n = additive_closure(gens).size();
    require(q_ % n == 0, Errc::Internal, "subgroup order does not divide q");
    return q_ / n;
}

} // namespace ringlab
