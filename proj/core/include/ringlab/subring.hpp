#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A unital subring of a quotient ring, materialized as its sorted element
/// list (closure under + and * is established at construction).
struct UnitalSubring {
    RingPtr ring;
    std::vector<elem_t> elements;
    std::vector<elem_t> generators; // generating set the closure started from
    std::vector<std::uint8_t> member;

    u64 size() const { return elements.size(); }
    bool contains(elem_t e) const { return member[e] != 0; }
};

/// Smallest unital subring containing the generators (fixed point of
/// alternating additive and multiplicative closure).
UnitalSubring ring_generated_by(RingPtr ring, const std::vector<elem_t>& gens);

/// The preimage of a subfield's integer ring under the level-m reduction:
/// for a local ring this is pi_{n,m}^{-1}(O' mod P^m). Composite moduli carry
/// one (subfield, level) pair per component.
struct CongruentialSubring {
    RingPtr ring;
    std::vector<std::pair<std::string, int>> witness; // (subfield label, cut level) per component
    std::vector<elem_t> elements;
    std::vector<std::uint8_t> member;

    u64 size() const { return elements.size(); }
    bool contains(elem_t e) const { return member[e] != 0; }
    std::string describe() const;
};

/// R_{O',m} in a local ring; checks the realized cardinality
/// |O' mod P^m| * p^{d0 (n-m)}.
CongruentialSubring congruential_subring(RingPtr ring, const SubfieldInfo& subfield, int m);

/// Every congruential subring of the ring, deduplicated as element sets.
/// Local: all (subfield, m); composite: all componentwise products. The kept
/// witness has maximal cut level, then maximal subfield degree.
const std::vector<CongruentialSubring>& all_congruential_subrings(const RingPtr& ring);

/// Level groups D_i of a subring of a local ring: the image in O/P^e of the
/// p^i-divisible slice, for 0 <= i <= floor(n/e) - 1. The chain is ascending
/// with at most [K:Q] strict jumps.
struct LevelProfile {
    RingPtr residue_ring; // O/P^e
    std::vector<std::vector<elem_t>> groups;

    size_t levels() const { return groups.size(); }
    bool constant() const;
    int strict_jumps() const;
    std::vector<u64> sizes() const;
};

LevelProfile level_profile(const UnitalSubring& sub);

struct CongruentialWitness {
    bool congruential = false;
    std::vector<std::pair<std::string, int>> witness;
};

/// True iff the subring equals some R_{O',m} (componentwise for composite
/// moduli); the witness is returned when it exists.
CongruentialWitness is_congruential(const UnitalSubring& sub);

/// An (a, b, K_0) exhaustive-search witness for the subring structure
/// containments pi_{P^b}(O_0 cap P^a) = pi_{P^b}(R cap P^a) and
/// pi_{P^b}(R) subset pi_{P^b}(O_0), under n >= b >= C a. Returns the witness
/// maximizing b-a (then minimal a, then smallest subfield degree), or nullopt:
/// small n may genuinely admit none.
struct StructureWitness {
    int a = 0, b = 0;
    SubfieldInfo subfield;
};

std::optional<StructureWitness> structure_witness(const UnitalSubring& sub, int C);

/// With a constant level profile, decides whether the subring is exactly the
/// image of the ring of integers of some subfield. Errors: ProfileNotConstant.
struct Cor324Result {
    bool holds = false;
    SubfieldInfo subfield;
};

Cor324Result corollary_324_check(const UnitalSubring& sub);

/// Exhaustive unital-subring enumeration; capped at |ring| <= 729 because the
/// subring lattice explodes combinatorially beyond that.
std::vector<UnitalSubring> enumerate_unital_subrings(const RingPtr& ring);

} // namespace ringlab
