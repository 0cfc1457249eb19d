#pragma once

#include <optional>

#include "ringlab/measure.hpp"
#include "ringlab/sets.hpp"
#include "ringlab/subring.hpp"

namespace ringlab {

/// An affine test coset a + bR on a congruential (or general unital) subring,
/// with the audit numbers attached.
struct AffineCoset {
    elem_t shift = 0;  // a
    elem_t factor = 0; // b
    std::vector<std::pair<std::string, int>> subring_witness;
    u64 index = 1; // [ring : bR] as abelian groups
    std::vector<elem_t> elements;
    double mass = 0;
    double threshold = 0;
    double log_margin = 0; // log(threshold) - log(mass); negative = violation
};

/// Precomputed coset partitions for one (ring, epsilon): all subgroups bR,
/// for R congruential, with index > q^epsilon, pruned to one representative
/// per realized subgroup.
class AuditContext {
public:
    struct Family {
        std::vector<std::pair<std::string, int>> witness;
        elem_t b = 0;
        u64 index = 1;
        u64 coset_count = 0;
        std::vector<u32> coset_of;     // elem -> coset id
        std::vector<elem_t> coset_rep; // coset id -> minimal element
    };

    AuditContext(RingPtr ring, double epsilon);
    const QuotientRing& ring() const { return *ring_; }
    double epsilon() const { return epsilon_; }
    const std::vector<Family>& families() const { return families_; }

    std::vector<elem_t> coset_elements(const Family& f, u32 coset_id) const;

private:
    RingPtr ring_;
    double epsilon_;
    std::vector<Family> families_;
};

struct AuditReport {
    bool pass = true;
    double epsilon = 0, gamma = 0;
    u64 cosets_checked = 0;
    std::optional<AffineCoset> worst; // minimal log-margin
};

/// Checks mu(a + bR) <= [ring : bR]^{-gamma} over every congruential coset of
/// index > q^epsilon (boundary equality counts as a pass) and returns the
/// worst coset.
AuditReport nonconcentration_audit(const Measure& mu, double epsilon, double gamma);
AuditReport nonconcentration_audit(const Measure& mu, const AuditContext& ctx, double gamma);

/// Set form of the same audit (the |A cap (a+bR)| < index^{-delta2} |A|
/// admissibility condition of the sum-product sweeps).
bool set_nonconcentrated(const std::vector<elem_t>& set, const AuditContext& ctx, double delta2);

struct EnergyReport {
    u64 additive = 0, multiplicative = 0;
    double additive_ratio = 0, multiplicative_ratio = 0; // E / |A|^3
};

/// Exact quadruple counts E(A) = #{a1 + a2 = a3 + a4} and its multiplicative
/// twin.
EnergyReport energies(const ElementSet& a);

/// The normalized autocorrelation phi = q (mu * mu_-), its peak set
/// S = { x : phi(x) > q^{-2 eps} phi(0) }, and the exact side identities
/// phi(0) = sum |mu_hat|^2 = max phi and sum_x phi(x) = q.
struct AutocorrelationProfile {
    std::vector<double> phi;
    std::optional<std::vector<Rational>> phi_exact;
    double phi0 = 0;
    double epsilon = 0;
    std::vector<elem_t> peak_set;
};

AutocorrelationProfile autocorrelation_profile(const Measure& mu, double epsilon);

struct DecayScanReport {
    double max_primitive_abs = 0;
    char_t argmax = 0;
    double tau_emp = 0; // -log(max)/log q; +inf when the maximum vanishes
    u64 primitive_count = 0;
};

/// Exact scan of | (mu_1 x ... x mu_k)^hat | over all primitive characters.
DecayScanReport decay_scan(const std::vector<Measure>& mus, const CharacterTable& chars);

/// Exact identity between the k-fold multiplicative convolution and the
/// alternating symmetric-power combination (1/k!) sum (-1)^i P_{k-i} with
/// P_t = sum over t-subsets of the k-fold self-convolution of the subset sum.
/// Errors: ExactModeRequired.
bool polyiden_decomposition_check(const std::vector<Measure>& mus);

/// Raw quantities behind the three-alternative dichotomy for a measure on a
/// local ring: the quadrilinear character sum (i), the fiber concentration
/// table (ii), and the peak sets S and Lambda. The subset extraction of
/// alternative (iii) is an imported theorem and is not performed.
struct AlternativesProbe {
    double quad_sum = 0;      // sum_y sum_xi |mu^(xi)|^2 |mu^(y xi)|^2 mu(y)
    double quad_threshold = 0; // q^{-tau} sum |mu^|^2
    bool alt_i = false;

    struct FiberRow {
        int level = 0; // m
        double max_fiber_mass = 0;
        double threshold = 0; // p^{-2 d0 m tau / eps}
    };
    std::vector<FiberRow> fibers; // one row per m > eps n
    bool alt_ii = false;

    int v1 = 0, v2 = 0; // maximizing valuation strata
    std::vector<elem_t> peak_set;      // S
    std::vector<elem_t> correlated_set; // Lambda
};

AlternativesProbe alternatives_probe(const Measure& mu, double epsilon, double tau);

} // namespace ringlab
