#pragma once

#include <complex>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Index of an additive character, in the same mixed-radix scheme as ring
/// elements: chi_c(x) = e( sum_i c_i x_i / m_i ).
using char_t = elem_t;

/// The additive dual of a quotient ring together with the module action
/// (y, chi) -> y chi and the primitivity classification.
///
/// The pairing is exact: pairing_num returns the numerator r of the pairing
/// exponent r/M in Q/Z, with M the additive exponent of the ring. Complex
/// values are looked up in a precomputed M-th root table.
class CharacterTable {
public:
    explicit CharacterTable(RingPtr ring);

    const QuotientRing& ring() const { return *ring_; }
    RingPtr ring_ptr() const { return ring_; }
    u64 size() const { return ring_->size(); }
    i64 root_order() const { return M_; }

    char_t trivial() const { return 0; }
    i64 pairing_num(char_t chi, elem_t x) const;
    std::complex<double> value(char_t chi, elem_t x) const {
        return roots_[size_t(pairing_num(chi, x))];
    }

    /// The character x -> chi(x y).
    char_t scaled(elem_t y, char_t chi) const;

    /// Primitive: nontrivial on the minimal ideal piece of every component
    /// (for a prime-power modulus this is the usual "not induced from
    /// O/P^{n-1}" condition; composite moduli are classified componentwise).
    bool is_primitive(char_t chi) const;
    std::vector<char_t> primitive_characters() const;

    u64 dual_orbit_size(char_t chi) const; // |{y chi : y in ring}|

private:
    RingPtr ring_;
    i64 M_;
    std::vector<i64> weights_; // M / m_i
    std::vector<std::complex<double>> roots_;
    std::vector<elem_t> basis_elems_;
    std::vector<std::vector<elem_t>> min_ideals_; // per component, in ambient coordinates
};

} // namespace ringlab
