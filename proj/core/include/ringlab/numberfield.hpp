#pragma once

#include <string>
#include <vector>

#include "ringlab/poly.hpp"

namespace ringlab {

/// A declared subfield of a number field: its generator is given exactly as an
/// integer vector in the power basis 1, theta, ..., theta^{d-1} of the ambient
/// field. The Z-span of the powers of that generator must be the full ring of
/// integers of the subfield (all shipped specs satisfy this).
struct SubfieldSpec {
    std::string label;
    IntPoly min_poly;
    std::vector<i64> embedding;
};

struct NumberFieldSpec {
    std::string label;
    IntPoly min_poly; // monic, irreducible over Q, degree <= 4
    std::vector<SubfieldSpec> subfields;
    bool subfields_declared = false;

    int degree() const { return poly_degree(min_poly); }

    /// Checks monic irreducibility and every declared subfield embedding.
    /// Throws ReduciblePolynomial / BadConfig.
    void validate() const;
};

struct PrimeIdealSpec {
    i64 p = 0;
    IntPoly g; // monic irreducible factor of min_poly mod p
    int e = 1; // ramification index
    int d0 = 1; // residue degree

    u64 residue_size() const { return ipow(u64(p), unsigned(d0)); }
};

struct IdealFactor {
    PrimeIdealSpec prime;
    int exponent = 1;
};

struct IdealDescriptor {
    std::vector<IdealFactor> factors;

    bool is_prime_power() const { return factors.size() == 1; }
    /// True when the residue characteristics |O/P_i| are pairwise coprime.
    bool coprime_residues() const;
    u64 norm() const; // prod p_i^{d0_i * n_i}
};

/// Factors (p) into prime ideals of Z[theta], sorted by (d0, g).
/// Errors: NonMonogenicPrime when p divides [O : Z[theta]] (Dedekind test),
/// ReduciblePolynomial if the field polynomial is invalid.
std::vector<PrimeIdealSpec> factor_rational_prime(const NumberFieldSpec& field, i64 p);

struct SubfieldInfo {
    std::string label;
    IntPoly min_poly;
    std::vector<i64> embedding; // generator coordinates, length = field degree
    int degree = 1;
};

/// All subfields including Q and the field itself, sorted by degree.
/// Errors: MissingSubfieldData for degree-4 fields without a declared list.
std::vector<SubfieldInfo> enumerate_subfields(const NumberFieldSpec& field);

/// Fields used throughout the test and experiment corpus:
/// "rational" (Q), "gaussian" (Q(i)), "sqrt2" (Q(sqrt 2)), "cbrt2" (Q(2^{1/3})),
/// "zeta8" (Q(zeta_8), degree 4 with three quadratic subfields).
const NumberFieldSpec& builtin_field(const std::string& label);
std::vector<std::string> builtin_field_labels();

} // namespace ringlab
