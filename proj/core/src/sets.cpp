#include "ringlab/sets.hpp"

#include <algorithm>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

void check_same_ring(const ElementSet& a, const ElementSet& b) {
    require(&a.ring() == &b.ring(), Errc::RingMismatch, "sets live on different rings");
}

} // namespace

ElementSet::ElementSet(RingPtr ring)
    : ring_(std::move(ring)), bits_((ring_->size() + 63) / 64, 0) {}

ElementSet ElementSet::of(RingPtr ring, const std::vector<elem_t>& elems) {
    ElementSet s(std::move(ring));
    for (elem_t e : elems) s.insert(e);
    return s;
}

ElementSet ElementSet::full(RingPtr ring) {
    ElementSet s(ring);
    for (elem_t e = 0; e < ring->size(); ++e) s.insert(e);
    return s;
}

std::vector<elem_t> ElementSet::elements() const {
    std::vector<elem_t> out;
    out.reserve(count_);
    for (elem_t e = 0; e < ring_->size(); ++e)
        if (contains(e)) out.push_back(e);
    return out;
}

bool ElementSet::contains_all(const std::vector<elem_t>& elems) const {
    for (elem_t e : elems)
        if (!contains(e)) return false;
    return true;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

ElementSet sum_set(const ElementSet& a, const ElementSet& b) {
    check_same_ring(a, b);
    const auto& R = a.ring();
    ElementSet out(a.ring_ptr());
    auto ea = a.elements(), eb = b.elements();
    for (elem_t x : ea) {
        for (elem_t y : eb) out.insert(R.add(x, y));
        if (out.is_full()) break;
    }
    return out;
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
    check_same_ring(a, b);
    const auto& R = a.ring();
    ElementSet out(a.ring_ptr());
    auto ea = a.elements(), eb = b.elements();
    for (elem_t x : ea)
        for (elem_t y : eb) out.insert(R.mul(x, y));
    return out;
}

ElementSet negated_set(const ElementSet& a) {
    const auto& R = a.ring();
    ElementSet out(a.ring_ptr());
    for (elem_t e : a.elements()) out.insert(R.neg(e));
    return out;
}

ElementSet difference_set(const ElementSet& a, const ElementSet& b) {
    return sum_set(a, negated_set(b));
}

ElementSet iterated_sum_product(const ElementSet& a, int r, int k, u64 op_budget) {
    require(r >= 1 && k >= 1, Errc::BadConfig, "need r, k >= 1");
    u64 spent = 0;
    auto charge = [&](u64 ops) {
        spent += ops;
        require(spent <= op_budget, Errc::CapacityExceeded, "iterated sum-product budget exceeded");
    };
    ElementSet power = a;
    for (int i = 1; i < k; ++i) {
        charge(power.count() * a.count());
        power = product_set(power, a);
    }
    ElementSet sum = power;
    for (int i = 1; i < r && !sum.is_full(); ++i) {
        charge(sum.count() * power.count());
        sum = sum_set(sum, power);
    }
    if (sum.is_full()) return sum;
    charge(sum.count() * sum.count());
    return difference_set(sum, sum);
}

std::vector<std::pair<int, ElementSet>> valuation_strata(const ElementSet& a) {
    const auto& R = a.ring();
    require(R.is_local(), Errc::NotLocalRing, "valuation strata need a prime-power modulus");
    std::vector<std::pair<int, ElementSet>> out;
    for (int v = 0; v <= R.exponent(); ++v) {
        ElementSet s(a.ring_ptr());
        for (elem_t e : a.elements())
            if (R.valuation(e) == v) s.insert(e);
        if (!s.empty()) out.emplace_back(v, std::move(s));
    }
    return out;
}

InvertibleReduction invertible_reduction(const ElementSet& a) {
    const auto& R = a.ring();
    require(R.is_local(), Errc::NotLocalRing, "reduction needs a prime-power modulus");
    require(!a.empty(), Errc::BadConfig, "cannot reduce an empty set");
    auto strata = valuation_strata(a);
    int n = R.exponent();
    const std::pair<int, ElementSet>* best = nullptr;
    for (const auto& s : strata) {
        if (s.first == n) continue; // the {0} stratum has no invertible division
        if (!best || s.second.count() > best->second.count()) best = &s;
    }
    require(best != nullptr, Errc::BadConfig, "set has no nonzero element to reduce");

    int index = best->first;
    RingPtr small = index == 0 ? a.ring_ptr() : R.reduced(n - index);
    ElementSet divided(small);
    for (elem_t e : best->second.elements()) {
        elem_t y = R.divide_uniformizer_power(e, index);
        require(small->is_unit(y), Errc::Internal, "divided element is not a unit");
        divided.insert(y);
    }
    return InvertibleReduction{index, std::move(small), std::move(divided)};
}

} // namespace ringlab
