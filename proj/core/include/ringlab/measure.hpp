#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <iosfwd>
#include <random>
#include <vector>

#include "ringlab/character.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A (possibly signed) weight vector over ring elements.
///
/// Exact mode stores weights as integers over one common denominator, which
/// keeps convolutions in integer arithmetic; floating mode stores doubles.
/// Probability-measure invariants (nonnegative, total mass one) are checked at
/// the operations that require them, so intermediate signed combinations
/// (e.g. the symmetric-power decompositions) are representable.
class Measure {
public:
    static Measure zero(RingPtr ring, bool exact = true);
    static Measure dirac(RingPtr ring, elem_t at, bool exact = true);
    static Measure uniform(RingPtr ring, bool exact = true);
    static Measure uniform_on(RingPtr ring, const std::vector<elem_t>& support, bool exact = true);
    static Measure uniform_on_units(RingPtr ring, bool exact = true);
    static Measure from_integer_weights(RingPtr ring, std::vector<BigInt> num, BigInt den);
    static Measure from_double_weights(RingPtr ring, std::vector<double> w);
    /// Random exact probability measure with the given support size (weights
    /// are uniform random integers 1..64 over the chosen support).
    static Measure random_probability(RingPtr ring, size_t support, std::mt19937_64& rng);

    bool exact() const { return exact_; }
    const QuotientRing& ring() const { return *ring_; }
    RingPtr ring_ptr() const { return ring_; }
    u64 size() const { return ring_->size(); }

    double weight(elem_t e) const;
    Rational exact_weight(elem_t e) const; // ExactModeRequired in floating mode
    const BigInt& numerator(elem_t e) const;
    const BigInt& denominator() const;

    double total() const;
    Rational exact_total() const;
    bool is_probability(double tol = 1e-12) const;
    double mass(const std::vector<elem_t>& set) const;
    Rational exact_mass(const std::vector<elem_t>& set) const;
    std::vector<elem_t> support() const;
    double max_weight() const;

    Measure to_floating() const;
    void normalize(); // divide by the total mass (must be nonzero)
    /// Reduce the common denominator by the gcd of all entries.
    void canonicalize();

    Measure& add_scaled(const Measure& other, const Rational& c);
    Measure scaled(const Rational& c) const;
    bool exactly_equal(const Measure& other) const;

    /// Pushforward x -> -x.
    Measure reflected() const;
    /// Pushforward along the canonical projection onto target.
    Measure projected(RingPtr target) const;
    /// Pushforward along an arbitrary element map f: ring -> target.
    template <typename F>
    Measure mapped(RingPtr target, F&& f) const;

private:
    Measure(RingPtr ring, bool exact);
    friend Measure add_convolve(const Measure&, const Measure&);
    friend Measure mul_convolve(const Measure&, const Measure&);

    RingPtr ring_;
    bool exact_;
    std::vector<BigInt> num_;
    BigInt den_ = 1;
    std::vector<double> dbl_;
};

/// Additive convolution (mu * nu)(x) = sum_{y+z=x} mu(y) nu(z).
/// Errors: RingMismatch when the operands live on different ring objects.
Measure add_convolve(const Measure& mu, const Measure& nu);
/// Multiplicative convolution over the ring product.
Measure mul_convolve(const Measure& mu, const Measure& nu);

Measure add_power(const Measure& mu, int r);
Measure mul_power(const Measure& mu, int k);

std::complex<double> fourier(const Measure& mu, const CharacterTable& chars, char_t chi);
std::vector<std::complex<double>> full_fourier(const Measure& mu, const CharacterTable& chars);

/// CSV rows: coord_0,...,coord_{rank-1},numerator,denominator. Missing
/// elements get weight zero.
Measure measure_from_csv(RingPtr ring, std::istream& in);
void measure_to_csv(const Measure& mu, std::ostream& out);

template <typename F>
Measure Measure::mapped(RingPtr target, F&& f) const {
    Measure out = Measure::zero(target, exact_);
    if (exact_) {
        out.den_ = den_;
        for (elem_t e = 0; e < size(); ++e)
            if (num_[e] != 0) out.num_[f(e)] += num_[e];
    } else {
        for (elem_t e = 0; e < size(); ++e)
            if (dbl_[e] != 0) out.dbl_[f(e)] += dbl_[e];
    }
    return out;
}

} // namespace ringlab
