#pragma once

#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Bitset-backed subset of a quotient ring, keyed by element index.
class ElementSet {
public:
    explicit ElementSet(RingPtr ring);
    static ElementSet of(RingPtr ring, const std::vector<elem_t>& elems);
    static ElementSet full(RingPtr ring);

    const QuotientRing& ring() const { return *ring_; }
    RingPtr ring_ptr() const { return ring_; }
    size_t count() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool is_full() const { return count_ == ring_->size(); }

    bool contains(elem_t e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
    void insert(elem_t e) {
        u64 m = u64(1) << (e & 63);
        if (!(bits_[e >> 6] & m)) {
            bits_[e >> 6] |= m;
            ++count_;
        }
    }

    std::vector<elem_t> elements() const;
    bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }
    bool contains_all(const std::vector<elem_t>& elems) const;
    bool is_subset_of(const ElementSet& o) const;

private:
    RingPtr ring_;
    std::vector<u64> bits_;
    size_t count_ = 0;
};

/// Exact set images {a+b} and {a*b}. Errors: RingMismatch.
ElementSet sum_set(const ElementSet& a, const ElementSet& b);
ElementSet product_set(const ElementSet& a, const ElementSet& b);
ElementSet negated_set(const ElementSet& a);
/// {a - b : a in A, b in B}
ElementSet difference_set(const ElementSet& a, const ElementSet& b);

/// sum_r A^k - sum_r A^k, with early exit once the full ring is reached.
/// Errors: CapacityExceeded when the step budget is blown.
ElementSet iterated_sum_product(const ElementSet& a, int r, int k, u64 op_budget = u64(1) << 32);

/// Partition of a set of a local ring by exact uniformizer valuation; only
/// nonempty strata are returned (the stratum at v = n is {0}).
std::vector<std::pair<int, ElementSet>> valuation_strata(const ElementSet& a);

/// The largest stratum A_i (smallest i on ties, i < n) divided by p^i, living
/// in O/P^{n-i}; its elements are units there.
struct InvertibleReduction {
    int index = 0;
    RingPtr reduced_ring;
    ElementSet divided;
};

InvertibleReduction invertible_reduction(const ElementSet& a);

} // namespace ringlab
