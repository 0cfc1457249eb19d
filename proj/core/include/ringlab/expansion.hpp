#pragma once

#include <functional>

#include "ringlab/diagnostics.hpp"
#include "ringlab/sets.hpp"

namespace ringlab {

// -- sum-product sweep ---------------------------------------------------------

struct SweepConfig {
    double delta1 = 0.25; // density window q^{d1} < |A| < q^{1-d1}
    double delta2 = 0.3;  // admissibility exponent
    double epsilon = 0.1; // audit index floor q^{eps}
    bool exhaustive = true;
    u64 samples = 0; // admissible sets to collect in random mode
    u64 seed = 0;
    int threads = 1;
    size_t max_rows = 100000; // per-set rows kept for the CSV
};

struct SweepRow {
    u64 set_id = 0; // bitmask (exhaustive) or draw index (random)
    u32 set_size = 0, sum_size = 0, prod_size = 0;
    double delta3 = 0;
};

struct SweepReport {
    u64 enumerated = 0;       // sets inspected
    u64 window_rejected = 0;  // outside the density window
    u64 audit_rejected = 0;   // failed the non-concentration admissibility
    u64 admissible = 0;
    double min_delta3 = 0;
    std::vector<elem_t> witness; // an admissible set attaining the minimum
    std::vector<u64> histogram;  // delta3 in 50 buckets over [-0.5, 2.0]
    std::vector<SweepRow> rows;
    size_t size_min = 0, size_max = 0;
};

/// Sweeps subsets of the ring inside the density window, keeps those passing
/// the set non-concentration audit at (epsilon, delta2), and reports the
/// empirical expansion exponent delta3 = log(max(|A+A|,|A.A|))/log|A| - 1.
/// Exhaustive mode enumerates all subsets (ring size <= 28 required);
/// random mode draws admissible sets with the recorded seed.
/// Errors: NoAdmissibleSets when the density window is empty.
SweepReport sumproduct_sweep(RingPtr ring, const SweepConfig& cfg);

// -- bounded generation ---------------------------------------------------------

struct GenerationCaps {
    int r1 = 4, r2 = 6;
    double tau = 1.0; // success once the covered quotient reaches q^tau
    u64 op_budget = u64(1) << 33;
};

struct GenerationReport {
    bool success = false;
    int r1 = 0, r2 = 0;
    std::vector<int> upper; // exponents of L1 (the quotient's lower ideal)
    std::vector<int> lower; // exponents of L2
    u64 cover_size = 1;     // |L2/L1|
    double tau_emp = 0;
    bool verified = false; // cover re-verified membership by membership
};

/// Smallest (r1, r2) in lexicographic order such that
/// sum_{r2} A^{r1} - sum_{r2} A^{r1} covers an ideal quotient L2/L1 above the
/// modulus of size >= q^tau; on failure reports the largest quotient covered
/// at the caps.
GenerationReport bounded_generation_search(const ElementSet& a, const GenerationCaps& caps);

// -- 24-fold covering -----------------------------------------------------------

struct CoveringReport {
    double gamma = 0; // 1 - log|A|/log q
    std::vector<int> exponents; // l_i
    u64 ideal_norm = 1;         // |O / prod P^{l_i}|
    bool bound_ok = false;      // ideal_norm < q^{6 gamma / 5}
    bool containment = false;   // prod P^{2 l_i} subset of sum_24 A^2 - sum_24 A^2
};

/// For a dense set (|A| > q^{9/10}), finds the smallest ideal prod P^{l_i}
/// with norm < q^{6 gamma/5} whose doubled power is covered by
/// sum_24 A^2 - sum_24 A^2, verified by direct computation.
/// Errors: DensityTooLow.
CoveringReport verify_cor_2346(const ElementSet& a);

// -- bilinear character-sum bound -------------------------------------------------

struct CharacterBoundRow {
    elem_t z = 0;
    u64 annihilator_index = 1; // q_z
    double abs_hat = 0;
    double bound = 0; // q_z^{-k(g1+g2-1)/2}
};

struct CharacterBoundReport {
    double gamma1 = 0, gamma2 = 0;
    int k = 0;
    std::vector<CharacterBoundRow> rows; // one per z != 0
    double worst_margin = 0;             // min over rows of bound - abs_hat
    bool coverage_expected = false;      // k (g1+g2-1) >= 4
    bool coverage = false;               // sum_j A_j B_j equals the full ring
};

/// The appendix bilinear bound: nu is the pushforward of the counting measure
/// on prod (A_j x B_j) under sum x_j y_j; asserts the per-character decay and,
/// in the coverage regime, that sum_j A_j B_j is everything. The fiber
/// hypothesis (boundary equality allowed) is audited on every proper quotient.
/// Errors: HypothesisViolated with the failing fiber.
CharacterBoundReport lemma_0715_check(const std::vector<ElementSet>& As,
                                      const std::vector<ElementSet>& Bs, double gamma1,
                                      double gamma2);

// -- minimal concentrated coset -----------------------------------------------------

/// Smallest coset a + bR (over unital subrings when the ring is small enough
/// to enumerate them, congruential subrings otherwise) with
/// |A cap (a+bR)| >= [ring : bR]^{-theta} |A|; minimality is re-verified:
/// no strictly contained satisfying coset exists. The full ring is always a
/// valid fallback.
AffineCoset minimal_coset_search(const ElementSet& a, double theta);

} // namespace ringlab
