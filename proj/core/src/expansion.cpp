#include "ringlab/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "ringlab/errors.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {

namespace {

constexpr size_t kHistogramBuckets = 50;
constexpr double kHistLo = -0.5, kHistHi = 2.0;

size_t hist_bucket(double d3) {
    double t = (d3 - kHistLo) / (kHistHi - kHistLo);
    t = std::clamp(t, 0.0, 1.0 - 1e-12);
    return size_t(t * kHistogramBuckets);
}

double delta3_of(size_t set_size, size_t grown) {
    return std::log(double(grown)) / std::log(double(set_size)) - 1.0;
}

struct SweepShard {
    u64 enumerated = 0, window_rejected = 0, audit_rejected = 0, admissible = 0;
    double min_delta3 = std::numeric_limits<double>::infinity();
    u64 min_id = 0;
    std::vector<elem_t> witness;
    std::vector<u64> histogram = std::vector<u64>(kHistogramBuckets, 0);
    std::vector<SweepRow> rows;
};

void merge_shard(SweepReport& rep, SweepShard& sh, size_t max_rows) {
    rep.enumerated += sh.enumerated;
    rep.window_rejected += sh.window_rejected;
    rep.audit_rejected += sh.audit_rejected;
    rep.admissible += sh.admissible;
    for (size_t i = 0; i < kHistogramBuckets; ++i) rep.histogram[i] += sh.histogram[i];
    // shards merge in ascending id order, so first-wins keeps ties deterministic
    if (sh.admissible && (rep.witness.empty() || sh.min_delta3 < rep.min_delta3)) {
        rep.min_delta3 = sh.min_delta3;
        rep.witness = std::move(sh.witness);
    }
    for (auto& r : sh.rows) {
        if (rep.rows.size() >= max_rows) break;
        rep.rows.push_back(r);
    }
}

} // namespace

SweepReport sumproduct_sweep(RingPtr ring, const SweepConfig& cfg) {
    const auto& R = *ring;
    double q = double(R.size());
    double lo = std::pow(q, cfg.delta1), hi = std::pow(q, 1.0 - cfg.delta1);
    size_t smin = size_t(std::floor(lo)) + 1;
    size_t smax = hi - std::floor(hi) < 1e-12 ? size_t(hi) - 1 : size_t(std::floor(hi));
    require(smin <= smax && smin <= R.size(), Errc::NoAdmissibleSets,
            "density window q^d1 < |A| < q^{1-d1} is empty");

    AuditContext audit(ring, cfg.epsilon);
    SweepReport rep;
    rep.histogram.assign(kHistogramBuckets, 0);
    rep.size_min = smin;
    rep.size_max = smax;
    rep.min_delta3 = std::numeric_limits<double>::infinity();

    if (cfg.exhaustive) {
        require(R.size() <= 28, Errc::CapacityExceeded,
                "exhaustive sweep is limited to rings with at most 28 elements");
        u32 n = u32(R.size());
        // dense op tables make the per-mask work branch-light
        std::vector<std::uint8_t> addt(size_t(n) * n), mult(size_t(n) * n);
        for (u32 i = 0; i < n; ++i)
            for (u32 j = 0; j < n; ++j) {
                addt[i * n + j] = std::uint8_t(R.add(i, j));
                mult[i * n + j] = std::uint8_t(R.mul(i, j));
            }
        u64 total = u64(1) << n;
        int workers = std::max(1, cfg.threads);
        std::vector<SweepShard> shards(size_t(std::min<u64>(u64(workers), total)));
        parallel_chunks(total, workers, [&](int tid, u64 begin, u64 end) {
            SweepShard& sh = shards[size_t(tid)];
            std::vector<elem_t> elems;
            for (u64 mask = begin; mask < end; ++mask) {
                ++sh.enumerated;
                int pc = __builtin_popcountll(mask);
                if (size_t(pc) < smin || size_t(pc) > smax) {
                    ++sh.window_rejected;
                    continue;
                }
                elems.clear();
                for (u32 e = 0; e < n; ++e)
                    if (mask & (u64(1) << e)) elems.push_back(e);
                if (!set_nonconcentrated(elems, audit, cfg.delta2)) {
                    ++sh.audit_rejected;
                    continue;
                }
                u64 sumv = 0, prodv = 0;
                for (size_t i = 0; i < elems.size(); ++i)
                    for (size_t j = i; j < elems.size(); ++j) {
                        sumv |= u64(1) << addt[elems[i] * n + elems[j]];
                        prodv |= u64(1) << mult[elems[i] * n + elems[j]];
                    }
                u32 ssum = u32(__builtin_popcountll(sumv));
                u32 sprod = u32(__builtin_popcountll(prodv));
                double d3 = delta3_of(elems.size(), std::max(ssum, sprod));
                ++sh.admissible;
                ++sh.histogram[hist_bucket(d3)];
                if (d3 < sh.min_delta3) {
                    sh.min_delta3 = d3;
                    sh.min_id = mask;
                    sh.witness = elems;
                }
                if (sh.rows.size() < cfg.max_rows)
                    sh.rows.push_back({mask, u32(elems.size()), ssum, sprod, d3});
            }
        });
        for (auto& sh : shards) merge_shard(rep, sh, cfg.max_rows);
        return rep;
    }

    // random sampler: draw subsets at sizes uniform in the window
    std::mt19937_64 rng(cfg.seed);
    std::vector<elem_t> pool(size_t(R.size()));
    for (elem_t e = 0; e < R.size(); ++e) pool[e] = e;
    u64 draws = 0, max_draws = cfg.samples * 10000 + 1000;
    SweepShard sh;
    while (sh.admissible < cfg.samples && draws < max_draws) {
        ++draws;
        ++sh.enumerated;
        size_t sz = smin + size_t(rng() % u64(smax - smin + 1));
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<elem_t> elems(pool.begin(), pool.begin() + long(sz));
        std::sort(elems.begin(), elems.end());
        if (!set_nonconcentrated(elems, audit, cfg.delta2)) {
            ++sh.audit_rejected;
            continue;
        }
        ElementSet A = ElementSet::of(ring, elems);
        size_t ssum = sum_set(A, A).count(), sprod = product_set(A, A).count();
        double d3 = delta3_of(sz, std::max(ssum, sprod));
        ++sh.admissible;
        ++sh.histogram[hist_bucket(d3)];
        if (d3 < sh.min_delta3) {
            sh.min_delta3 = d3;
            sh.min_id = draws;
            sh.witness = elems;
        }
        if (sh.rows.size() < cfg.max_rows)
            sh.rows.push_back({draws, u32(sz), u32(ssum), u32(sprod), d3});
    }
    merge_shard(rep, sh, cfg.max_rows);
    return rep;
}

namespace {

// quotient rings O / prod P_i^{u_i} for nonzero exponent tuples, cached
struct QuotientCache {
    RingPtr ambient;
    std::map<std::vector<int>, RingPtr> rings;

    RingPtr get(const std::vector<int>& u) {
        auto it = rings.find(u);
        if (it != rings.end()) return it->second;
        IdealDescriptor ideal;
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i] > 0) {
                IdealFactor f = ambient->component(i);
                f.exponent = u[i];
                ideal.factors.push_back(f);
            }
        RingPtr r = ideal.factors.empty()
                        ? nullptr
                        : QuotientRing::build(ambient->field(), ideal, ambient->capacity_bound());
        rings.emplace(u, r);
        return r;
    }
};

// componentwise valuation tuple of an element of a (possibly composite) ring
std::vector<int> valuation_tuple(const QuotientRing& ring, elem_t e) {
    std::vector<int> out;
    if (ring.is_local()) {
        out.push_back(ring.valuation(e));
        return out;
    }
    for (size_t i = 0; i < ring.component_count(); ++i)
        out.push_back(ring.component_ring(i)->valuation(ring.project_component(i, e)));
    return out;
}

struct CoverScan {
    u64 best_cover = 1;
    std::vector<int> best_upper, best_lower;
};

// largest ideal quotient L2/L1 covered by D modulo L1
CoverScan best_covered_quotient(const ElementSet& D, QuotientCache& cache) {
    const auto& R = D.ring();
    size_t nc = R.component_count();
    std::vector<int> maxexp(nc);
    for (size_t i = 0; i < nc; ++i) maxexp[i] = R.component(i).exponent;

    CoverScan out;
    std::vector<int> u(nc, 0);
    while (true) {
        // advance the exponent tuple u (odometer), skipping the all-zero tuple
        size_t k = 0;
        while (k < nc && ++u[k] > maxexp[k]) u[k++] = 0;
        if (k == nc) break;

        RingPtr small = cache.get(u);
        std::vector<std::uint8_t> hit(size_t(small->size()), 0);
        for (elem_t e = 0; e < R.size(); ++e)
            if (D.contains(e)) hit[R.project(*small, e)] = 1;
        std::vector<std::vector<int>> vals(size_t(small->size()));
        for (elem_t y = 0; y < small->size(); ++y) vals[y] = valuation_tuple(*small, y);
        // indices of nonzero u-components, to align tuples
        std::vector<size_t> live;
        for (size_t i = 0; i < nc; ++i)
            if (u[i] > 0) live.push_back(i);

        std::vector<int> v(nc, 0);
        while (true) {
            bool ok_tuple = true;
            u64 cover = 1;
            for (size_t i = 0; i < nc; ++i) {
                if (v[i] > u[i]) ok_tuple = false;
                cover *= ipow(u64(R.component(i).prime.p),
                              unsigned(R.component(i).prime.d0 * (u[i] - std::min(v[i], u[i]))));
            }
            if (ok_tuple && cover > out.best_cover) {
                bool covered = true;
                for (elem_t y = 0; y < small->size() && covered; ++y) {
                    bool in_ideal = true;
                    for (size_t li = 0; li < live.size() && in_ideal; ++li)
                        in_ideal = vals[y][li] >= v[live[li]];
                    if (in_ideal && !hit[y]) covered = false;
                }
                if (covered) {
                    out.best_cover = cover;
                    out.best_upper = u;
                    out.best_lower = v;
                }
            }
            size_t j = 0;
            while (j < nc && ++v[j] > u[j]) v[j++] = 0;
            if (j == nc) break;
        }
    }
    return out;
}

} // namespace

GenerationReport bounded_generation_search(const ElementSet& a, const GenerationCaps& caps) {
    const auto& R = a.ring();
    RingPtr ring = a.ring_ptr();
    QuotientCache cache{ring, {}};
    double logq = std::log(double(R.size()));

    GenerationReport best;
    u64 spent = 0;
    ElementSet power = a;
    for (int r1 = 1; r1 <= caps.r1; ++r1) {
        if (r1 > 1) {
            spent += power.count() * a.count();
            require(spent <= caps.op_budget, Errc::CapacityExceeded, "generation search budget");
            power = product_set(power, a);
        }
        ElementSet sum = power;
        for (int r2 = 1; r2 <= caps.r2; ++r2) {
            if (r2 > 1 && !sum.is_full()) {
                spent += sum.count() * power.count();
                require(spent <= caps.op_budget, Errc::CapacityExceeded, "generation search budget");
                sum = sum_set(sum, power);
            }
            ElementSet diff = sum.is_full() ? sum : difference_set(sum, sum);
            CoverScan scan = best_covered_quotient(diff, cache);
            if (scan.best_cover > best.cover_size) {
                best.cover_size = scan.best_cover;
                best.upper = scan.best_upper;
                best.lower = scan.best_lower;
                best.r1 = r1;
                best.r2 = r2;
            }
            if (std::log(double(scan.best_cover)) >= caps.tau * logq - 1e-9) {
                best.success = true;
                best.cover_size = scan.best_cover;
                best.upper = scan.best_upper;
                best.lower = scan.best_lower;
                best.r1 = r1;
                best.r2 = r2;
                best.tau_emp = std::log(double(best.cover_size)) / logq;
                // re-verify from scratch: rebuild the set chain and check
                // membership element by element
                ElementSet p2 = a;
                for (int i = 1; i < r1; ++i) p2 = product_set(p2, a);
                ElementSet s2 = p2;
                for (int i = 1; i < r2; ++i) s2 = sum_set(s2, p2);
                ElementSet d2 = difference_set(s2, s2);
                RingPtr small = cache.get(best.upper);
                std::vector<std::uint8_t> hit(size_t(small->size()), 0);
                for (elem_t e = 0; e < R.size(); ++e)
                    if (d2.contains(e)) hit[R.project(*small, e)] = 1;
                std::vector<size_t> live;
                for (size_t i = 0; i < best.upper.size(); ++i)
                    if (best.upper[i] > 0) live.push_back(i);
                bool ok = true;
                for (elem_t y = 0; y < small->size() && ok; ++y) {
                    auto vt = valuation_tuple(*small, y);
                    bool in_ideal = true;
                    for (size_t li = 0; li < live.size() && in_ideal; ++li)
                        in_ideal = vt[li] >= best.lower[live[li]];
                    if (in_ideal) ok = hit[y] != 0;
                }
                best.verified = ok;
                return best;
            }
        }
    }
    best.tau_emp = best.cover_size > 1 ? std::log(double(best.cover_size)) / logq : 0.0;
    return best;
}

CoveringReport verify_cor_2346(const ElementSet& a) {
    const auto& R = a.ring();
    double q = double(R.size());
    require(!a.empty(), Errc::BadConfig, "empty set");
    CoveringReport rep;
    rep.gamma = 1.0 - std::log(double(a.count())) / std::log(q);
    require(rep.gamma < 0.1 - 1e-12, Errc::DensityTooLow,
            "need |A| > q^{9/10} for the 24-fold covering");

    ElementSet sq = product_set(a, a);
    ElementSet sum = sq;
    for (int i = 1; i < 24 && !sum.is_full(); ++i) sum = sum_set(sum, sq);
    ElementSet D = sum.is_full() ? sum : difference_set(sum, sum);

    size_t nc = R.component_count();
    std::vector<int> maxexp(nc);
    for (size_t i = 0; i < nc; ++i) maxexp[i] = R.component(i).exponent;

    // candidate exponent tuples sorted by ideal norm
    std::vector<std::pair<u64, std::vector<int>>> cands;
    std::vector<int> l(nc, 0);
    while (true) {
        u64 norm = 1;
        for (size_t i = 0; i < nc; ++i)
            norm *= ipow(u64(R.component(i).prime.p), unsigned(R.component(i).prime.d0 * l[i]));
        cands.emplace_back(norm, l);
        size_t k = 0;
        while (k < nc && ++l[k] > maxexp[k]) l[k++] = 0;
        if (k == nc) break;
    }
    std::sort(cands.begin(), cands.end());

    for (auto& [norm, exps] : cands) {
        if (std::log(double(norm)) >= (6.0 * rep.gamma / 5.0) * std::log(q)) break;
        bool contained = true;
        for (elem_t e = 0; e < R.size() && contained; ++e) {
            bool in_ideal = true;
            if (R.is_local()) {
                in_ideal = R.valuation(e) >= std::min(2 * exps[0], maxexp[0]);
            } else {
                for (size_t i = 0; i < nc && in_ideal; ++i)
                    in_ideal = R.component_ring(i)->valuation(R.project_component(i, e)) >=
                               std::min(2 * exps[i], maxexp[i]);
            }
            if (in_ideal) contained = D.contains(e);
        }
        if (contained) {
            rep.exponents = exps;
            rep.ideal_norm = norm;
            rep.bound_ok = true;
            rep.containment = true;
            return rep;
        }
    }
    rep.exponents.assign(nc, 0);
    rep.ideal_norm = 1;
    rep.bound_ok = true;
    rep.containment = false;
    return rep;
}

CharacterBoundReport lemma_0715_check(const std::vector<ElementSet>& As,
                                      const std::vector<ElementSet>& Bs, double gamma1,
                                      double gamma2) {
    require(!As.empty() && As.size() == Bs.size(), Errc::BadConfig,
            "need matching nonempty set families");
    RingPtr ring = As[0].ring_ptr();
    const auto& R = *ring;
    for (const auto& s : As) require(&s.ring() == &R, Errc::RingMismatch, "set family ring mismatch");
    for (const auto& s : Bs) require(&s.ring() == &R, Errc::RingMismatch, "set family ring mismatch");
    int k = int(As.size());

    // hypothesis audit on every proper quotient, boundary equality allowed
    size_t nc = R.component_count();
    std::vector<int> maxexp(nc);
    for (size_t i = 0; i < nc; ++i) maxexp[i] = R.component(i).exponent;
    QuotientCache cache{ring, {}};
    std::vector<int> m(nc, 0);
    while (true) {
        size_t kk = 0;
        while (kk < nc && ++m[kk] > maxexp[kk]) m[kk++] = 0;
        if (kk == nc) break;
        RingPtr small = cache.get(m);
        std::vector<u32> fiber(size_t(small->size()));
        auto audit_family = [&](const std::vector<ElementSet>& fam, double g, const char* name) {
            for (size_t j = 0; j < fam.size(); ++j) {
                std::fill(fiber.begin(), fiber.end(), 0);
                u32 worst = 0;
                for (elem_t e : fam[j].elements())
                    worst = std::max(worst, ++fiber[R.project(*small, e)]);
                double ratio = double(worst) / double(fam[j].count());
                if (!le_pow(ratio, double(small->size()), -g))
                    fail(Errc::HypothesisViolated,
                         std::string(name) + "_" + std::to_string(j + 1) +
                             " concentrates on a fiber of O/" + small->describe() +
                             " (count " + std::to_string(worst) + ")");
            }
        };
        audit_family(As, gamma1, "A");
        audit_family(Bs, gamma2, "B");
    }

    // nu = pushforward of the counting measure under sum x_j y_j
    Measure nu = mul_convolve(Measure::uniform_on(ring, As[0].elements(), false),
                              Measure::uniform_on(ring, Bs[0].elements(), false));
    for (int j = 1; j < k; ++j)
        nu = add_convolve(nu, mul_convolve(Measure::uniform_on(ring, As[size_t(j)].elements(), false),
                                           Measure::uniform_on(ring, Bs[size_t(j)].elements(), false)));

    CharacterTable chars(ring);
    char_t base = 0;
    for (char_t chi = 0; chi < chars.size(); ++chi)
        if (chars.is_primitive(chi)) {
            base = chi;
            break;
        }

    CharacterBoundReport rep;
    rep.gamma1 = gamma1;
    rep.gamma2 = gamma2;
    rep.k = k;
    double expo = k * (gamma1 + gamma2 - 1.0) / 2.0;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (elem_t z = 1; z < R.size(); ++z) {
        // q_z = |z O/a|, the size of the principal ideal generated by z
        std::vector<std::uint8_t> seen(size_t(R.size()), 0);
        u64 qz = 0;
        for (elem_t x = 0; x < R.size(); ++x) {
            elem_t t = R.mul(z, x);
            if (!seen[t]) {
                seen[t] = 1;
                ++qz;
            }
        }
        CharacterBoundRow row;
        row.z = z;
        row.annihilator_index = qz;
        row.abs_hat = std::abs(fourier(nu, chars, chars.scaled(z, base)));
        row.bound = std::pow(double(qz), -expo);
        rep.worst_margin = std::min(rep.worst_margin, row.bound - row.abs_hat);
        rep.rows.push_back(row);
    }

    rep.coverage_expected = k * (gamma1 + gamma2 - 1.0) >= 4.0 - 1e-9;
    ElementSet D = product_set(As[0], Bs[0]);
    for (int j = 1; j < k && !D.is_full(); ++j)
        D = sum_set(D, product_set(As[size_t(j)], Bs[size_t(j)]));
    rep.coverage = D.is_full();
    return rep;
}

AffineCoset minimal_coset_search(const ElementSet& a, double theta) {
    RingPtr ring = a.ring_ptr();
    const auto& R = *ring;

    struct Candidate {
        std::vector<elem_t> elements;
        elem_t shift, factor;
        u64 index;
        std::vector<std::pair<std::string, int>> witness;
        double mass;
    };
    std::vector<Candidate> satisfying;
    std::map<std::vector<elem_t>, bool> seen_subgroups;

    auto scan_subring = [&](const std::vector<elem_t>& elems,
                            const std::vector<std::pair<std::string, int>>& witness) {
        for (elem_t b = 0; b < R.size(); ++b) {
            std::vector<elem_t> image;
            image.reserve(elems.size());
            for (elem_t r : elems) image.push_back(R.mul(b, r));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (!seen_subgroups.emplace(image, true).second) continue;
            u64 index = R.size() / image.size();
            // strict |A cap (a+bR)| > index^{-theta} |A| for proper cosets;
            // the index-1 coset (the whole ring) always qualifies
            double log_need = -theta * std::log(double(index)) + std::log(double(a.count()));
            std::vector<std::uint8_t> visited(size_t(R.size()), 0);
            for (elem_t rep = 0; rep < R.size(); ++rep) {
                if (visited[rep]) continue;
                std::vector<elem_t> coset;
                coset.reserve(image.size());
                u64 inter = 0;
                for (elem_t s : image) {
                    elem_t x = R.add(rep, s);
                    visited[x] = 1;
                    coset.push_back(x);
                    if (a.contains(x)) ++inter;
                }
                if (index == 1 ? inter == a.count()
                               : (inter > 0 && std::log(double(inter)) > log_need + 1e-9)) {
                    std::sort(coset.begin(), coset.end());
                    satisfying.push_back(
                        {std::move(coset), rep, b, index, witness, double(inter) / double(a.count())});
                }
            }
        }
    };

    if (R.size() <= 729) {
        for (const auto& sub : enumerate_unital_subrings(ring)) {
            auto cw = is_congruential(sub);
            std::vector<std::pair<std::string, int>> witness =
                cw.congruential
                    ? cw.witness
                    : std::vector<std::pair<std::string, int>>{
                          {"unital(" + std::to_string(sub.elements.size()) + ")", 0}};
            scan_subring(sub.elements, witness);
        }
    } else {
        for (const auto& sub : all_congruential_subrings(ring)) scan_subring(sub.elements, sub.witness);
    }

    require(!satisfying.empty(), Errc::Internal, "the full ring coset must satisfy the bound");
    std::sort(satisfying.begin(), satisfying.end(), [](const Candidate& x, const Candidate& y) {
        if (x.elements.size() != y.elements.size()) return x.elements.size() < y.elements.size();
        return x.elements < y.elements;
    });
    const Candidate& chosen = satisfying.front();
    // minimality re-verification: no satisfying coset is strictly contained
    for (const auto& other : satisfying) {
        if (&other == &chosen || other.elements.size() >= chosen.elements.size()) continue;
        require(!std::includes(chosen.elements.begin(), chosen.elements.end(),
                               other.elements.begin(), other.elements.end()),
                Errc::Internal, "minimality violated by a contained coset");
    }

    AffineCoset out;
    out.shift = chosen.shift;
    out.factor = chosen.factor;
    out.subring_witness = chosen.witness;
    out.index = chosen.index;
    out.elements = chosen.elements;
    out.mass = chosen.mass;
    out.threshold = std::pow(double(chosen.index), -theta);
    out.log_margin = std::log(chosen.mass) - std::log(out.threshold);
    return out;
}

} // namespace ringlab
