#include "ringlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ringlab/errors.hpp"

namespace ringlab {

AuditContext::AuditContext(RingPtr ring, double epsilon) : ring_(ring), epsilon_(epsilon) {
    const auto& R = *ring_;
    double logq = std::log(double(R.size()));
    std::map<std::vector<elem_t>, bool> seen;
    for (const auto& sub : all_congruential_subrings(ring_)) {
        for (elem_t b = 0; b < R.size(); ++b) {
            std::vector<elem_t> image;
            image.reserve(sub.elements.size());
            for (elem_t r : sub.elements) image.push_back(R.mul(b, r));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            u64 index = R.size() / image.size();
            if (std::log(double(index)) <= epsilon_ * logq) continue; // need index > q^eps
            if (!seen.emplace(image, true).second) continue;

            Family fam;
            fam.witness = sub.witness;
            fam.b = b;
            fam.index = index;
            fam.coset_of.assign(size_t(R.size()), u32(-1));
            for (elem_t e = 0; e < R.size(); ++e) {
                if (fam.coset_of[e] != u32(-1)) continue;
                u32 id = u32(fam.coset_rep.size());
                fam.coset_rep.push_back(e);
                for (elem_t s : image) fam.coset_of[R.add(e, s)] = id;
            }
            fam.coset_count = fam.coset_rep.size();
            require(fam.coset_count == index, Errc::Internal, "coset partition size mismatch");
            families_.push_back(std::move(fam));
        }
    }
}

std::vector<elem_t> AuditContext::coset_elements(const Family& f, u32 coset_id) const {
    std::vector<elem_t> out;
    for (elem_t e = 0; e < ring_->size(); ++e)
        if (f.coset_of[e] == coset_id) out.push_back(e);
    return out;
}

AuditReport nonconcentration_audit(const Measure& mu, const AuditContext& ctx, double gamma) {
    require(&mu.ring() == &ctx.ring(), Errc::RingMismatch, "audit context of a different ring");
    AuditReport report;
    report.epsilon = ctx.epsilon();
    report.gamma = gamma;
    std::vector<double> masses;
    double worst_margin = 0;
    bool have_worst = false;
    const AuditContext::Family* worst_fam = nullptr;
    u32 worst_coset = 0;
    double worst_mass = 0;

    for (const auto& fam : ctx.families()) {
        masses.assign(fam.coset_count, 0.0);
        for (elem_t e = 0; e < mu.size(); ++e) masses[fam.coset_of[e]] += mu.weight(e);
        double log_thresh = -gamma * std::log(double(fam.index));
        report.cosets_checked += fam.coset_count;
        for (u32 c = 0; c < fam.coset_count; ++c) {
            if (masses[c] <= 0) continue;
            double margin = log_thresh - std::log(masses[c]);
            if (!have_worst || margin < worst_margin) {
                have_worst = true;
                worst_margin = margin;
                worst_fam = &fam;
                worst_coset = c;
                worst_mass = masses[c];
            }
        }
    }
    if (have_worst) {
        AffineCoset w;
        w.shift = worst_fam->coset_rep[worst_coset];
        w.factor = worst_fam->b;
        w.subring_witness = worst_fam->witness;
        w.index = worst_fam->index;
        w.elements = ctx.coset_elements(*worst_fam, worst_coset);
        w.mass = worst_mass;
        w.threshold = std::pow(double(worst_fam->index), -gamma);
        w.log_margin = worst_margin;
        report.worst = std::move(w);
        report.pass = worst_margin >= -1e-9; // boundary equality passes
    }
    return report;
}

AuditReport nonconcentration_audit(const Measure& mu, double epsilon, double gamma) {
    AuditContext ctx(mu.ring_ptr(), epsilon);
    return nonconcentration_audit(mu, ctx, gamma);
}

bool set_nonconcentrated(const std::vector<elem_t>& set, const AuditContext& ctx, double delta2) {
    if (set.empty()) return true;
    std::vector<u32> counts;
    for (const auto& fam : ctx.families()) {
        counts.assign(fam.coset_count, 0);
        u32 worst = 0;
        for (elem_t e : set) worst = std::max(worst, ++counts[fam.coset_of[e]]);
        // strict inequality |A cap coset| < index^{-delta2} |A|; boundary
        // equality rejects (log-space comparison keeps that robust)
        if (std::log(double(worst)) >=
            -delta2 * std::log(double(fam.index)) + std::log(double(set.size())) - 1e-9)
            return false;
    }
    return true;
}

EnergyReport energies(const ElementSet& a) {
    const auto& R = a.ring();
    auto elems = a.elements();
    std::vector<u64> radd(size_t(R.size()), 0), rmul(size_t(R.size()), 0);
    for (elem_t x : elems)
        for (elem_t y : elems) {
            ++radd[R.add(x, y)];
            ++rmul[R.mul(x, y)];
        }
    EnergyReport out;
    for (u64 c : radd) out.additive += c * c;
    for (u64 c : rmul) out.multiplicative += c * c;
    double cube = double(elems.size()) * double(elems.size()) * double(elems.size());
    out.additive_ratio = double(out.additive) / cube;
    out.multiplicative_ratio = double(out.multiplicative) / cube;
    return out;
}

AutocorrelationProfile autocorrelation_profile(const Measure& mu, double epsilon) {
    const auto& R = mu.ring();
    AutocorrelationProfile out;
    out.epsilon = epsilon;
    Measure conv = add_convolve(mu, mu.reflected());
    out.phi.resize(size_t(R.size()));
    if (conv.exact()) {
        out.phi_exact.emplace(size_t(R.size()));
        for (elem_t e = 0; e < R.size(); ++e) {
            (*out.phi_exact)[e] = Rational(R.size()) * conv.exact_weight(e);
            out.phi[e] = (*out.phi_exact)[e].convert_to<double>();
        }
    } else {
        for (elem_t e = 0; e < R.size(); ++e) out.phi[e] = double(R.size()) * conv.weight(e);
    }
    out.phi0 = out.phi[R.zero()];
    double cutoff = std::pow(double(R.size()), -2.0 * epsilon) * out.phi0;
    for (elem_t e = 0; e < R.size(); ++e)
        if (out.phi[e] > cutoff) out.peak_set.push_back(e);
    return out;
}

DecayScanReport decay_scan(const std::vector<Measure>& mus, const CharacterTable& chars) {
    require(!mus.empty(), Errc::BadConfig, "decay scan needs at least one measure");
    Measure prod = mus[0];
    for (size_t i = 1; i < mus.size(); ++i) prod = mul_convolve(prod, mus[i]);
    auto hat = full_fourier(prod, chars);

    DecayScanReport out;
    for (char_t chi = 0; chi < chars.size(); ++chi) {
        if (!chars.is_primitive(chi)) continue;
        ++out.primitive_count;
        double a = std::abs(hat[chi]);
        if (a > out.max_primitive_abs) {
            out.max_primitive_abs = a;
            out.argmax = chi;
        }
    }
    double q = double(chars.ring().size());
    out.tau_emp = out.max_primitive_abs > 0
                      ? -std::log(out.max_primitive_abs) / std::log(q)
                      : std::numeric_limits<double>::infinity();
    return out;
}

bool polyiden_decomposition_check(const std::vector<Measure>& mus) {
    require(!mus.empty(), Errc::BadConfig, "need at least one measure");
    int k = int(mus.size());
    for (const auto& m : mus)
        require(m.exact(), Errc::ExactModeRequired, "identity check needs exact measures");

    Measure lhs = mus[0];
    for (int i = 1; i < k; ++i) lhs = mul_convolve(lhs, mus[size_t(i)]);

    Measure rhs = Measure::zero(mus[0].ring_ptr(), true);
    for (u64 mask = 1; mask < (u64(1) << k); ++mask) {
        int t = __builtin_popcountll(mask);
        Measure subset_sum = Measure::zero(mus[0].ring_ptr(), true);
        for (int j = 0; j < k; ++j)
            if (mask & (u64(1) << j)) subset_sum.add_scaled(mus[size_t(j)], 1);
        Measure power = mul_power(subset_sum, k);
        // sign (-1)^{k-t}
        rhs.add_scaled(power, (k - t) % 2 == 0 ? Rational(1) : Rational(-1));
    }
    Rational inv_kfact(1);
    for (int i = 2; i <= k; ++i) inv_kfact /= i;
    rhs = rhs.scaled(inv_kfact);
    return lhs.exactly_equal(rhs);
}

AlternativesProbe alternatives_probe(const Measure& mu, double epsilon, double tau) {
    const auto& R = mu.ring();
    require(R.is_local(), Errc::NotLocalRing, "the probe needs a prime-power modulus");
    int n = R.exponent(), d0 = R.residue_degree();
    double q = double(R.size());
    AlternativesProbe out;

    // phi and the quadrilinear sum, via phi(x) = q (mu * mu_-)(x) so the sum
    // is exact up to the final double conversion
    AutocorrelationProfile prof = autocorrelation_profile(mu, epsilon);
    double quad = 0;
    for (elem_t y = 0; y < R.size(); ++y) {
        double wy = mu.weight(y);
        if (wy == 0) continue;
        double inner = 0;
        for (elem_t x = 0; x < R.size(); ++x)
            if (prof.phi[x] != 0) inner += prof.phi[x] * prof.phi[R.mul(x, y)];
        quad += wy * inner;
    }
    // sum_{x,y} phi(x) phi(xy) mu(y) = q * quadrilinear character sum
    out.quad_sum = quad / q;
    out.quad_threshold = std::pow(q, -tau) * prof.phi0;
    out.alt_i = out.quad_sum < out.quad_threshold;

    for (int m = int(epsilon * n) + 1; m <= n; ++m) {
        RingPtr small = R.reduced(m);
        std::vector<double> fiber(size_t(small->size()), 0);
        for (elem_t e = 0; e < R.size(); ++e) fiber[R.project(*small, e)] += mu.weight(e);
        AlternativesProbe::FiberRow row;
        row.level = m;
        row.max_fiber_mass = *std::max_element(fiber.begin(), fiber.end());
        row.threshold = std::pow(double(R.residue_char()), -2.0 * d0 * m * tau / epsilon);
        if (row.max_fiber_mass > row.threshold) out.alt_ii = true;
        out.fibers.push_back(row);
    }

    // maximizing valuation strata for the Lambda set
    double best = -1;
    for (int v1 = 0; v1 <= n; ++v1)
        for (int v2 = 0; v2 <= n; ++v2) {
            double s = 0;
            for (elem_t x = 0; x < R.size(); ++x) {
                if (R.valuation(x) != v1 || prof.phi[x] == 0) continue;
                for (elem_t y = 0; y < R.size(); ++y) {
                    if (R.valuation(y) != v2) continue;
                    double wy = mu.weight(y);
                    if (wy != 0) s += prof.phi[x] * prof.phi[R.mul(x, y)] * wy;
                }
            }
            if (s > best) {
                best = s;
                out.v1 = v1;
                out.v2 = v2;
            }
        }

    out.peak_set = prof.peak_set;
    std::vector<std::uint8_t> in_peak(size_t(R.size()), 0);
    for (elem_t e : prof.peak_set) in_peak[e] = 1;
    double lambda_cut = prof.phi0 > 0 ? std::pow(q, 1.0 - 3.0 * tau) / prof.phi0 : 0;
    for (elem_t y = 0; y < R.size(); ++y) {
        if (R.valuation(y) != out.v2) continue;
        u64 cnt = 0;
        for (elem_t x = 0; x < R.size(); ++x)
            if (R.valuation(x) == out.v1 && in_peak[x] && in_peak[R.mul(x, y)]) ++cnt;
        if (double(cnt) > lambda_cut) out.correlated_set.push_back(y);
    }
    return out;
}

} // namespace ringlab
