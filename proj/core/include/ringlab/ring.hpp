#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ringlab/numberfield.hpp"
#include "ringlab/smith.hpp"

namespace ringlab {

/// Elements of a finite quotient ring are dense indices 0 .. q-1 in the
/// mixed-radix encoding over the invariant-factor additive basis. Index 0 is
/// the zero element.
using elem_t = std::uint32_t;

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

constexpr u64 kDefaultCapacity = 1'000'000;

/// Canonical coordinates of an element with respect to the additive basis.
struct RingElement {
    std::vector<i64> coords;
};

/// A fully materialized finite quotient O/a of the ring of integers
/// O = Z[theta] of a number field of degree <= 4.
///
/// The additive group is stored in invariant-factor form m_1 | ... | m_k
/// (obtained from the Smith normal form of the ideal lattice in the power
/// basis of theta) and multiplication is carried by exact structure constants
/// on the invariant basis. Instances are immutable after construction and safe
/// to share read-only across threads; lazily built caches are mutex-guarded.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
public:
    static RingPtr build(const NumberFieldSpec& field, IdealDescriptor modulus,
                         u64 capacity = kDefaultCapacity);

    /// Z/m for m = p^n, going through the rational field. Test/CLI convenience.
    static RingPtr integers_mod(i64 p, int n, u64 capacity = kDefaultCapacity);

    // -- identity ------------------------------------------------------------
    const NumberFieldSpec& field() const { return field_; }
    const IdealDescriptor& modulus() const { return modulus_; }
    u64 size() const { return q_; }
    int field_degree() const { return d_; }
    const std::vector<i64>& additive_orders() const { return orders_; }
    int rank() const { return int(orders_.size()); }
    bool is_local() const { return modulus_.factors.size() == 1; }
    u64 capacity_bound() const { return capacity_; }
    std::string describe() const;

    // -- local shape (single prime-power modulus; NotLocalRing otherwise) -----
    int exponent() const;       // n in O/P^n
    int ramification() const;   // e of P
    int residue_degree() const; // d0 of P
    i64 residue_char() const;   // p

    // -- element arithmetic ----------------------------------------------------
    elem_t zero() const { return 0; }
    elem_t one() const { return one_; }
    elem_t add(elem_t a, elem_t b) const;
    elem_t sub(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t mul(elem_t a, elem_t b) const;
    elem_t pow(elem_t a, u64 e) const;
    elem_t scale(i64 c, elem_t a) const;
    elem_t from_int(i64 v) const;

    i64 coord(elem_t e, int i) const { return coords_[size_t(e) * size_t(rank_) + size_t(i)]; }
    RingElement coords_of(elem_t e) const;
    elem_t from_coords(const std::vector<i64>& c) const;
    /// Element with the given coordinates in the power basis 1, theta, ...
    elem_t from_power_basis(const std::vector<i64>& v) const;
    /// Canonical integer lift in the power basis, reduced mod the additive
    /// exponent of the ring.
    std::vector<i64> to_power_basis(elem_t e) const;

    // -- units and valuation ---------------------------------------------------
    u64 unit_count() const { return unit_count_; }
    bool is_unit(elem_t e) const;
    std::vector<elem_t> units() const;
    elem_t inverse(elem_t e) const; // BadConfig if not a unit

    /// Exact uniformizer valuation; v(0) = n (local rings only).
    int valuation(elem_t e) const;
    elem_t uniformizer() const; // local only
    /// Sorted members of P^m / P^n for 0 <= m <= n (local only).
    const std::vector<elem_t>& ideal_power_members(int m) const;
    bool in_ideal_power(elem_t e, int m) const;

    // -- canonical projections -------------------------------------------------
    /// O/P^m for m <= n (local rings); cached per ring.
    RingPtr reduced(int m) const;
    /// Canonical projection onto a quotient by a larger ideal of the same
    /// field (every factor of target divides this modulus).
    elem_t project(const QuotientRing& target, elem_t e) const;
    /// y in O/P^{n-i} -> p^i * lift(y) in this ring (local).
    elem_t times_uniformizer_power(const QuotientRing& small, elem_t y, int i) const;
    /// Section of the above: x with v(x) >= i -> the unique y in O/P^{n-i}
    /// with p^i y = x.
    elem_t divide_uniformizer_power(elem_t x, int i) const;

    // -- composite structure (CRT) ----------------------------------------------
    size_t component_count() const { return modulus_.factors.size(); }
    const IdealFactor& component(size_t i) const { return modulus_.factors.at(i); }
    RingPtr component_ring(size_t i) const;
    elem_t project_component(size_t i, elem_t e) const;
    elem_t crt_recombine(const std::vector<elem_t>& parts) const;
    /// O/(Q_1...Q_s) for the first s components in modulus order, 1 <= s.
    RingPtr prefix_ring(size_t s) const;
    elem_t project_prefix(size_t s, elem_t e) const;

    // -- additive subgroup machinery ---------------------------------------------
    std::vector<elem_t> additive_closure(const std::vector<elem_t>& gens) const;
    u64 additive_index(const std::vector<elem_t>& gens) const;

private:
    QuotientRing() = default;
    void init_tables();
    const std::vector<elem_t>& unit_list() const;

    NumberFieldSpec field_;
    IdealDescriptor modulus_;
    u64 q_ = 0, capacity_ = kDefaultCapacity, unit_count_ = 0;
    int d_ = 0, rank_ = 0;
    i64 char_ = 1; // additive exponent = largest invariant factor
    std::vector<i64> orders_, strides_;
    IMat umat_, uinv_;
    std::vector<int> kept_rows_;
    std::vector<std::vector<i64>> mul_table_; // rank x rank structure constants
    elem_t one_ = 0;
    std::vector<i64> coords_; // q * rank decode table

    // local-ring data
    std::vector<std::uint8_t> val_;
    std::vector<std::vector<elem_t>> ideal_members_;
    elem_t uniformizer_ = 0;

    // lazily built caches
    mutable std::mutex cache_mutex_;
    mutable std::map<int, RingPtr> tower_;
    mutable std::map<int, std::vector<elem_t>> divided_sections_;
    mutable std::vector<RingPtr> components_;
    mutable std::vector<std::vector<elem_t>> component_proj_;
    mutable std::map<size_t, std::pair<RingPtr, std::vector<elem_t>>> prefixes_;
    mutable std::vector<elem_t> crt_backward_;
    mutable std::vector<elem_t> units_;
    mutable bool units_built_ = false;

    void ensure_crt() const; // callers hold cache_mutex_
};

} // namespace ringlab
