#pragma once

#include <optional>

#include "ringlab/diagnostics.hpp"
#include "ringlab/measure.hpp"

namespace ringlab {

/// Screening / glueing parameters. The derivation mirrors the dependency
/// shape of the paper's parameter list with concrete small defaults; the
/// expansion constants it leans on are existential, so eps0/tau0/r1 are
/// experiment inputs rather than derived quantities, and rho2/rho4 have fixed
/// usable defaults. Every field can be overridden from a config.
struct GlueingParams {
    double gamma = 0.5;
    double kappa = 0.05;
    double Cd = 1.0;    // the degree-dependent family-count constant
    double eps0 = 0.25; // stand-in for the decay theorem's epsilon
    double tau0 = 0.5;  // stand-in for the decay theorem's tau
    int r1 = 2;
    int r2 = 4;
    double rho0 = 0, rho1 = 0, rho2 = 0.1, rho3 = 0, rho4 = 0.2;
    double epsilon = 0; // index floor exponent for the global audit

    static GlueingParams derive(double gamma, double kappa = 0.05, double Cd = 1.0,
                                double eps0 = 0.25, double tau0 = 0.5, int r1 = 2);
};

/// alpha_0 = 0, alpha_1 = [rho2 n / 2], alpha_2 = [rho2 n], then quadrupling,
/// clamped at n and deduplicated.
std::vector<int> dyadic_indices(int n, double rho2);

/// One screening family: all cosets a + bR in a local component with
/// v(b) = t1 and R the congruential subring cut at t2 - t1, deduplicated as
/// sets. t1 == t2 == n marks the singleton family {a} (the square-free branch
/// runs through the same path with these).
struct TestCosetFamily {
    size_t component = 0;
    std::string subfield;
    int t1 = 0, t2 = 0;
    u64 family_index = 1; // realized [O/Q_j : bR], equal across the family
    u64 paper_index = 1;  // |O/P|^{t1} |O' mod P|^{t2-t1}
    std::vector<std::vector<elem_t>> cosets; // sorted element lists in the component ring
};

TestCosetFamily test_set_family(const RingPtr& ring, size_t component, const SubfieldInfo& sub,
                                int t1, int t2);

/// All dyadic families for a component at this rho2 (subfields x index pairs,
/// plus the singleton family), index-1 families dropped, deduplicated.
std::vector<TestCosetFamily> test_sets(const RingPtr& ring, size_t component, double rho2);

/// One good/junk split B | C of O/a for one measure, one prefix, one test
/// component, produced by the recursive coset screening.
struct TubeDecomposition {
    size_t component = 0;
    std::vector<size_t> prefix; // component indices defining the fibers
    std::vector<elem_t> good, junk;
    double junk_mass = 0;

    struct JunkComponent {
        std::string subfield;
        int t1 = 0, t2 = 0;
        u64 family_index = 1;
        u64 absorbed_cosets = 0;
        double mass = 0; // after construction-order disjointing
        // heaviest absorbed tube: fiber key + coset (component coordinates)
        u64 top_fiber = 0;
        std::vector<elem_t> top_coset;
        double top_mass = 0;
    };
    std::vector<JunkComponent> components;
    u64 max_absorbed_per_fiber = 0; // over positive-mass fibers
};

/// Spec-order screening: fibers are the joint classes of the first
/// `prefix_len` components of the modulus; `component` is screened with the
/// families of test_sets(ring, component, rho2).
TubeDecomposition screen_decompose(const Measure& mu, size_t prefix_len, size_t component,
                                   double rho1, double rho2, double rho3);
/// Same, with an explicit prefix component list (used by the selection loop).
TubeDecomposition screen_decompose_over(const Measure& mu, const std::vector<size_t>& prefix,
                                        size_t component, double rho1, double rho2, double rho3);

/// Independent re-audit of the conditional non-concentration the good set
/// must satisfy: for every positive-mass fiber and every family coset,
/// mu(B cap fiber cap coset) < family_index^{-rho3} mu(fiber). Returns the
/// worst log-margin (positive = holds).
double reaudit_good_set(const Measure& mu, const TubeDecomposition& d, double rho2);

struct SelectionWitness {
    size_t measure = 0;
    std::vector<elem_t> coset_elements;
    u64 index = 1;           // [O/a : bR] of the witness coset
    double mass = 0;         // mu(a + bR)
    double audit_bound = 0;  // index^{-gamma}
    bool contradicts_audit = false;
    double paper_threshold = 0; // (q~)^{-1} (prod q_j^*)^{-rho3} rho1 / (2^{|I|+2} C(d) [log 1/rho2]^2)
};

struct SelectionReport {
    std::vector<size_t> accepted; // ordered component indices
    std::vector<std::vector<TubeDecomposition>> levels; // per accepted level, per measure
    bool complete = false;
    double coverage_exponent = 0; // log prod(accepted q_j) / log q
    std::optional<SelectionWitness> witness;
};

/// Greedy component acceptance: a component is accepted when every measure's
/// junk mass stays below rho1; when no remaining component is acceptable, a
/// concentration witness coset is assembled from the heaviest absorbed tubes
/// and checked against the global non-concentration audit.
SelectionReport select_components(const std::vector<Measure>& mus, const GlueingParams& p);

/// The amplified product-sum pushforward: the distribution of
/// x_1...x_{r1} + ... + x_{r1(r2-1)+1}...x_{r1 r2} + z with x blocks drawn
/// from mu_1..mu_{r1} and z uniform on the jitter set Z = sum_i Z_i,
/// Z_i a CRT section of O mod P_i^{[rho4 n_i]}. Computed by convolution; the
/// tuple space is never materialized.
struct PushforwardResult {
    Measure distribution; // probability measure on O/a
    std::vector<elem_t> z_set;
    std::vector<int> z_levels; // [rho4 n_i] per component
};

PushforwardResult build_psi_measure(const std::vector<Measure>& mus, int r2, double rho4);

/// Per-level densities, entropies and the chain inequality along the
/// filtration by cumulative products of components (in `order`).
struct EntropyLedger {
    struct Level {
        size_t prefix_len = 0;
        u64 prefix_size = 1;  // q~_s
        double entropy = 0;   // int F_s log+ F_s d nu_s
        double increment = 0; // int F_{s+1} log+ (F_{s+1}/F_s) d nu_{s+1}
        bool chain_ok = true;
        bool total_ok = true; // int F_s d nu_s == 1 (exact in exact mode)
    };
    std::vector<Level> levels;
    u64 support = 0; // X = |supp F_T|
    double support_exponent = 0;
    double flatness_bound = 0; // log(10^T (q~_T)^{2 r1 r2 rho1})
    bool chain_holds = true;
};

EntropyLedger entropy_ledger(const Measure& mu, const std::vector<size_t>& order,
                             const GlueingParams& p);

} // namespace ringlab
