#include "ringlab/subring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::vector<std::uint8_t> member_mask(const QuotientRing& ring, const std::vector<elem_t>& elems) {
    std::vector<std::uint8_t> m(size_t(ring.size()), 0);
    for (elem_t e : elems) m[e] = 1;
    return m;
}

// additive span of the powers of the subfield generator inside the given ring
std::vector<elem_t> subfield_image(const QuotientRing& ring, const SubfieldInfo& sub) {
    elem_t gen = ring.from_power_basis(sub.embedding);
    std::vector<elem_t> gens{ring.one()};
    elem_t cur = ring.one();
    for (int j = 1; j < sub.degree; ++j) {
        cur = ring.mul(cur, gen);
        gens.push_back(cur);
    }
    return ring.additive_closure(gens);
}

} // namespace

UnitalSubring ring_generated_by(RingPtr ring, const std::vector<elem_t>& gens) {
    const auto& R = *ring;
    std::vector<elem_t> basis{R.one()};
    for (elem_t g : gens) basis.push_back(g);
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    std::vector<elem_t> elems = R.additive_closure(basis);
    std::vector<std::uint8_t> member = member_mask(R, elems);
    bool grew = true;
    while (grew) {
        grew = false;
        size_t nb = basis.size();
        for (size_t i = 0; i < nb; ++i)
            for (size_t j = i; j < nb; ++j) {
                elem_t p = R.mul(basis[i], basis[j]);
                if (!member[p]) {
                    basis.push_back(p);
                    grew = true;
                }
            }
        if (grew) {
            elems = R.additive_closure(basis);
            member = member_mask(R, elems);
        }
    }
    UnitalSubring out;
    out.ring = std::move(ring);
    out.elements = std::move(elems);
    out.generators = gens;
    out.member = std::move(member);
    return out;
}

std::string CongruentialSubring::describe() const {
    std::ostringstream os;
    for (size_t i = 0; i < witness.size(); ++i) {
        if (i) os << " x ";
        os << "R(" << witness[i].first << ", m=" << witness[i].second << ")";
    }
    return os.str();
}

CongruentialSubring congruential_subring(RingPtr ring, const SubfieldInfo& subfield, int m) {
    const auto& R = *ring;
    int n = R.exponent();
    require(m >= 1 && m <= n, Errc::BadConfig, "cut level out of range");
    RingPtr small = R.reduced(m);
    std::vector<elem_t> image = subfield_image(*small, subfield);
    std::vector<std::uint8_t> in_image = member_mask(*small, image);

    CongruentialSubring out;
    out.ring = ring;
    out.witness = {{subfield.label, m}};
    for (elem_t e = 0; e < R.size(); ++e)
        if (in_image[R.project(*small, e)]) out.elements.push_back(e);
    out.member = member_mask(R, out.elements);

    u64 kernel = R.size() / small->size();
    require(out.elements.size() == image.size() * kernel, Errc::Internal,
            "congruential subring has unexpected cardinality");
    return out;
}

namespace {

std::vector<CongruentialSubring> build_congruential(const RingPtr& ring) {
    const auto& R = *ring;
    std::vector<CongruentialSubring> out;
    std::map<std::vector<elem_t>, size_t> seen;

    if (R.is_local()) {
        auto subs = enumerate_subfields(R.field());
        // descending level then descending degree, so the kept witness for a
        // duplicated set is the canonical one (full ring -> (K, n))
        for (int m = R.exponent(); m >= 1; --m)
            for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
                CongruentialSubring cand = congruential_subring(ring, *it, m);
                if (seen.emplace(cand.elements, out.size()).second) out.push_back(std::move(cand));
            }
        return out;
    }

    // composite: componentwise products (Goursat direction of the paper's
    // coprime-index decomposition)
    size_t nc = R.component_count();
    std::vector<std::vector<CongruentialSubring>> locals;
    for (size_t i = 0; i < nc; ++i) locals.push_back(build_congruential(R.component_ring(i)));

    std::vector<size_t> idx(nc, 0);
    while (true) {
        CongruentialSubring cand;
        cand.ring = ring;
        for (size_t i = 0; i < nc; ++i) cand.witness.push_back(locals[i][idx[i]].witness[0]);
        for (elem_t e = 0; e < R.size(); ++e) {
            bool in = true;
            for (size_t i = 0; i < nc && in; ++i)
                in = locals[i][idx[i]].contains(R.project_component(i, e));
            if (in) cand.elements.push_back(e);
        }
        cand.member = member_mask(R, cand.elements);
        if (seen.emplace(cand.elements, out.size()).second) out.push_back(std::move(cand));
        size_t k = 0;
        while (k < nc && ++idx[k] == locals[k].size()) idx[k++] = 0;
        if (k == nc) break;
    }
    return out;
}

} // namespace

const std::vector<CongruentialSubring>& all_congruential_subrings(const RingPtr& ring) {
    static std::mutex mu;
    static std::map<const QuotientRing*, std::vector<CongruentialSubring>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ring.get());
    if (it == cache.end()) it = cache.emplace(ring.get(), build_congruential(ring)).first;
    return it->second;
}

bool LevelProfile::constant() const {
    for (size_t i = 1; i < groups.size(); ++i)
        if (groups[i].size() != groups[0].size()) return false;
    return true;
}

int LevelProfile::strict_jumps() const {
    int jumps = 0;
    for (size_t i = 1; i < groups.size(); ++i)
        if (groups[i].size() > groups[i - 1].size()) ++jumps;
    return jumps;
}

std::vector<u64> LevelProfile::sizes() const {
    std::vector<u64> out;
    for (const auto& g : groups) out.push_back(g.size());
    return out;
}

LevelProfile level_profile(const UnitalSubring& sub) {
    const auto& R = *sub.ring;
    require(R.is_local(), Errc::NotLocalRing, "level profile needs a prime-power modulus");
    int n = R.exponent(), e = R.ramification();
    i64 p = R.residue_char();
    int levels = n / e; // indices 0 .. n/e - 1

    LevelProfile out;
    if (levels == 0) return out;
    out.residue_ring = R.reduced(e);
    out.groups.resize(size_t(levels));
    for (int i = 0; i < levels; ++i) {
        elem_t pi = R.from_int(i64(ipow(u64(p), unsigned(i))));
        std::set<elem_t> group;
        for (elem_t x = 0; x < R.size(); ++x)
            if (sub.contains(R.mul(pi, x))) group.insert(R.project(*out.residue_ring, x));
        out.groups[size_t(i)].assign(group.begin(), group.end());
    }
    for (size_t i = 1; i < out.groups.size(); ++i)
        require(std::includes(out.groups[i].begin(), out.groups[i].end(),
                              out.groups[i - 1].begin(), out.groups[i - 1].end()),
                Errc::Internal, "level groups are not ascending");
    return out;
}

CongruentialWitness is_congruential(const UnitalSubring& sub) {
    CongruentialWitness out;
    for (const auto& cand : all_congruential_subrings(sub.ring))
        if (cand.elements == sub.elements) {
            out.congruential = true;
            out.witness = cand.witness;
            return out;
        }
    return out;
}

std::optional<StructureWitness> structure_witness(const UnitalSubring& sub, int C) {
    const auto& R = *sub.ring;
    require(R.is_local(), Errc::NotLocalRing, "structure witness needs a prime-power modulus");
    require(C >= 3, Errc::BadConfig, "C must be at least 3");
    int n = R.exponent();

    std::optional<StructureWitness> best;
    auto better = [&](const StructureWitness& w) {
        if (!best) return true;
        if (w.b - w.a != best->b - best->a) return w.b - w.a > best->b - best->a;
        if (w.a != best->a) return w.a < best->a;
        return w.subfield.degree < best->subfield.degree;
    };

    for (const auto& sf : enumerate_subfields(R.field())) {
        // image of O_0 at full level, with valuations
        std::vector<elem_t> o0 = subfield_image(R, sf);
        for (int b = 1; b <= n; ++b) {
            RingPtr small = R.reduced(b);
            for (int a = 0; C * a <= b; ++a) {
                StructureWitness w{a, b, sf};
                if (!better(w)) continue;
                std::set<elem_t> lhs, rhs;
                for (elem_t y : o0)
                    if (R.valuation(y) >= a) lhs.insert(R.project(*small, y));
                bool contained = true;
                std::set<elem_t> o0b;
                for (elem_t y : o0) o0b.insert(R.project(*small, y));
                for (elem_t x : sub.elements) {
                    elem_t px = R.project(*small, x);
                    if (R.valuation(x) >= a) rhs.insert(px);
                    if (!o0b.count(px)) {
                        contained = false;
                        break;
                    }
                }
                if (contained && lhs == rhs) best = w;
            }
        }
    }
    return best;
}

Cor324Result corollary_324_check(const UnitalSubring& sub) {
    LevelProfile profile = level_profile(sub);
    require(profile.constant(), Errc::ProfileNotConstant,
            "level profile is not constant; corollary does not apply");
    const auto& R = *sub.ring;
    Cor324Result out;
    for (const auto& sf : enumerate_subfields(R.field())) {
        std::vector<elem_t> image = subfield_image(R, sf);
        if (image == sub.elements) {
            out.holds = true;
            out.subfield = sf;
            return out;
        }
    }
    return out;
}

std::vector<UnitalSubring> enumerate_unital_subrings(const RingPtr& ring) {
    const auto& R = *ring;
    require(R.size() <= 729, Errc::CapacityExceeded,
            "subring enumeration is capped at rings of size 3^6");
    std::vector<UnitalSubring> out;
    std::set<std::vector<elem_t>> seen;
    std::vector<size_t> queue;

    UnitalSubring prime = ring_generated_by(ring, {});
    seen.insert(prime.elements);
    out.push_back(std::move(prime));
    queue.push_back(0);

    while (!queue.empty()) {
        size_t cur = queue.back();
        queue.pop_back();
        std::vector<elem_t> gens = out[cur].generators;
        std::vector<std::uint8_t> inside = out[cur].member;
        gens.push_back(0);
        for (elem_t x = 0; x < R.size(); ++x) {
            if (inside[x]) continue;
            gens.back() = x;
            UnitalSubring bigger = ring_generated_by(ring, gens);
            if (seen.insert(bigger.elements).second) {
                out.push_back(std::move(bigger));
                queue.push_back(out.size() - 1);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UnitalSubring& a, const UnitalSubring& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

} // namespace ringlab
