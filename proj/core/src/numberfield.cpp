#include "ringlab/numberfield.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

// value of g at the element with the given power-basis coordinates, inside
// Z[x]/(f); exact integer arithmetic
IntPoly eval_poly_at(const IntPoly& g, const std::vector<i64>& coords, const IntPoly& f) {
    IntPoly gen(coords.begin(), coords.end());
    poly_trim(gen);
    IntPoly acc;
    for (int i = poly_degree(g); i >= 0; --i) {
        acc = poly_rem_monic(poly_mul(acc, gen), f);
        acc = poly_add(acc, IntPoly{g[size_t(i)]});
    }
    return poly_rem_monic(acc, f);
}

} // namespace

void NumberFieldSpec::validate() const {
    int d = degree();
    require(d >= 1 && d <= 4 && min_poly[size_t(d)] == 1, Errc::BadConfig,
            "field polynomial must be monic of degree 1..4 (" + label + ")");
    require(irreducible_over_Q(min_poly), Errc::ReduciblePolynomial,
            "field polynomial of " + label + " factors over Q");
    for (const auto& sub : subfields) {
        int ds = poly_degree(sub.min_poly);
        require(ds > 1 && ds < d && d % ds == 0, Errc::BadConfig,
                "subfield " + sub.label + " has invalid degree");
        require(sub.min_poly[size_t(ds)] == 1 && irreducible_over_Q(sub.min_poly),
                Errc::ReduciblePolynomial, "subfield polynomial of " + sub.label + " is invalid");
        require(sub.embedding.size() == size_t(d), Errc::BadConfig,
                "subfield " + sub.label + " embedding has wrong length");
        IntPoly value = eval_poly_at(sub.min_poly, sub.embedding, min_poly);
        require(poly_is_zero(value), Errc::BadConfig,
                "declared embedding of " + sub.label + " does not satisfy its minimal polynomial");
    }
}

bool IdealDescriptor::coprime_residues() const {
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].prime.p == factors[j].prime.p) return false;
    return true;
}

u64 IdealDescriptor::norm() const {
    u64 n = 1;
    for (const auto& f : factors)
        n *= ipow(u64(f.prime.p), unsigned(f.prime.d0 * f.exponent));
    return n;
}

std::vector<PrimeIdealSpec> factor_rational_prime(const NumberFieldSpec& field, i64 p) {
    field.validate();
    require(is_prime(p), Errc::BadConfig, "not a prime: " + std::to_string(p));
    require(dedekind_index_coprime(field.min_poly, p), Errc::NonMonogenicPrime,
            std::to_string(p) + " divides the index [O : Z[theta]] of " + field.label);

    std::vector<PrimeIdealSpec> out;
    int total = 0;
    for (const auto& fac : factor_mod_p(field.min_poly, p)) {
        PrimeIdealSpec spec;
        spec.p = p;
        spec.g = fac.factor;
        spec.e = fac.multiplicity;
        spec.d0 = poly_degree(fac.factor);
        total += spec.e * spec.d0;
        out.push_back(std::move(spec));
    }
    require(total == field.degree(), Errc::Internal, "sum e*d0 != degree");
    std::sort(out.begin(), out.end(), [](const PrimeIdealSpec& a, const PrimeIdealSpec& b) {
        if (a.d0 != b.d0) return a.d0 < b.d0;
        return a.g < b.g;
    });
    return out;
}

std::vector<SubfieldInfo> enumerate_subfields(const NumberFieldSpec& field) {
    int d = field.degree();
    require(d <= 4, Errc::BadConfig, "field degree exceeds 4");
    if (d == 4)
        require(field.subfields_declared, Errc::MissingSubfieldData,
                "degree-4 field " + field.label + " has no declared subfield list");

    std::vector<SubfieldInfo> out;
    std::vector<i64> rational(size_t(d), 0);
    rational[0] = 1;
    out.push_back({"Q", IntPoly{-1, 1}, rational, 1});
    for (const auto& sub : field.subfields)
        out.push_back({sub.label, sub.min_poly, sub.embedding, poly_degree(sub.min_poly)});
    if (d > 1) {
        std::vector<i64> theta(size_t(d), 0);
        theta[1] = 1;
        out.push_back({field.label, field.min_poly, theta, d});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const SubfieldInfo& a, const SubfieldInfo& b) { return a.degree < b.degree; });
    return out;
}

namespace {

std::map<std::string, NumberFieldSpec> make_builtin_fields() {
    std::map<std::string, NumberFieldSpec> m;
    {
        NumberFieldSpec f;
        f.label = "rational";
        f.min_poly = {0, 1}; // x, theta = 0
        f.subfields_declared = true;
        m[f.label] = f;
    }
    {
        NumberFieldSpec f;
        f.label = "gaussian";
        f.min_poly = {1, 0, 1}; // x^2 + 1
        f.subfields_declared = true;
        m[f.label] = f;
    }
    {
        NumberFieldSpec f;
        f.label = "sqrt2";
        f.min_poly = {-2, 0, 1}; // x^2 - 2
        f.subfields_declared = true;
        m[f.label] = f;
    }
    {
        NumberFieldSpec f;
        f.label = "cbrt2";
        f.min_poly = {-2, 0, 0, 1}; // x^3 - 2, no proper subfield
        f.subfields_declared = true;
        m[f.label] = f;
    }
    {
        // Q(zeta_8), theta = zeta_8, x^4 + 1. Quadratic subfields:
        //   i = theta^2, sqrt(2) = theta - theta^3, sqrt(-2) = theta + theta^3.
        NumberFieldSpec f;
        f.label = "zeta8";
        f.min_poly = {1, 0, 0, 0, 1};
        f.subfields_declared = true;
        f.subfields.push_back({"zeta8.i", {1, 0, 1}, {0, 0, 1, 0}});
        f.subfields.push_back({"zeta8.sqrt2", {-2, 0, 1}, {0, 1, 0, -1}});
        f.subfields.push_back({"zeta8.sqrt-2", {2, 0, 1}, {0, 1, 0, 1}});
        m[f.label] = f;
    }
    for (auto& [k, f] : m) f.validate();
    return m;
}

const std::map<std::string, NumberFieldSpec>& builtin_fields() {
    static const std::map<std::string, NumberFieldSpec> fields = make_builtin_fields();
    return fields;
}

} // namespace

const NumberFieldSpec& builtin_field(const std::string& label) {
    const auto& m = builtin_fields();
    auto it = m.find(label);
    require(it != m.end(), Errc::BadConfig, "unknown builtin field: " + label);
    return it->second;
}

std::vector<std::string> builtin_field_labels() {
    std::vector<std::string> out;
    for (const auto& [k, v] : builtin_fields()) out.push_back(k);
    return out;
}

} // namespace ringlab
