#include "ringlab/measure.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

void check_same_ring(const Measure& a, const Measure& b) {
    require(&a.ring() == &b.ring(), Errc::RingMismatch,
            "measures live on different rings: " + a.ring().describe() + " vs " +
                b.ring().describe());
}

} // namespace

Measure::Measure(RingPtr ring, bool exact) : ring_(std::move(ring)), exact_(exact) {
    if (exact_)
        num_.assign(size_t(ring_->size()), BigInt(0));
    else
        dbl_.assign(size_t(ring_->size()), 0.0);
}

Measure Measure::zero(RingPtr ring, bool exact) { return Measure(std::move(ring), exact); }

Measure Measure::dirac(RingPtr ring, elem_t at, bool exact) {
    Measure m(std::move(ring), exact);
    if (exact)
        m.num_[at] = 1;
    else
        m.dbl_[at] = 1.0;
    return m;
}

Measure Measure::uniform(RingPtr ring, bool exact) {
    Measure m(ring, exact);
    if (exact) {
        m.den_ = BigInt(ring->size());
        for (auto& v : m.num_) v = 1;
    } else {
        double w = 1.0 / double(ring->size());
        for (auto& v : m.dbl_) v = w;
    }
    return m;
}

Measure Measure::uniform_on(RingPtr ring, const std::vector<elem_t>& support, bool exact) {
    require(!support.empty(), Errc::BadConfig, "uniform measure needs a nonempty support");
    Measure m(ring, exact);
    if (exact) {
        m.den_ = BigInt(support.size());
        for (elem_t e : support) m.num_[e] += 1;
    } else {
        double w = 1.0 / double(support.size());
        for (elem_t e : support) m.dbl_[e] += w;
    }
    return m;
}

Measure Measure::uniform_on_units(RingPtr ring, bool exact) {
    auto us = ring->units();
    return uniform_on(std::move(ring), us, exact);
}

Measure Measure::from_integer_weights(RingPtr ring, std::vector<BigInt> num, BigInt den) {
    require(num.size() == size_t(ring->size()), Errc::BadConfig, "weight vector has wrong length");
    require(den > 0, Errc::BadConfig, "denominator must be positive");
    Measure m(std::move(ring), true);
    m.num_ = std::move(num);
    m.den_ = std::move(den);
    return m;
}

Measure Measure::from_double_weights(RingPtr ring, std::vector<double> w) {
    require(w.size() == size_t(ring->size()), Errc::BadConfig, "weight vector has wrong length");
    Measure m(std::move(ring), false);
    m.dbl_ = std::move(w);
    return m;
}

Measure Measure::random_probability(RingPtr ring, size_t support, std::mt19937_64& rng) {
    require(support >= 1 && support <= ring->size(), Errc::BadConfig, "bad support size");
    std::vector<elem_t> elems(size_t(ring->size()));
    for (elem_t e = 0; e < ring->size(); ++e) elems[e] = e;
    std::shuffle(elems.begin(), elems.end(), rng);
    Measure m(ring, true);
    BigInt total = 0;
    for (size_t i = 0; i < support; ++i) {
        i64 w = i64(rng() % 64) + 1;
        m.num_[elems[i]] = w;
        total += w;
    }
    m.den_ = total;
    return m;
}

double Measure::weight(elem_t e) const {
    if (!exact_) return dbl_[e];
    return Rational(num_[e], den_).convert_to<double>();
}

Rational Measure::exact_weight(elem_t e) const {
    require(exact_, Errc::ExactModeRequired, "measure is in floating mode");
    return Rational(num_[e], den_);
}

const BigInt& Measure::numerator(elem_t e) const {
    require(exact_, Errc::ExactModeRequired, "measure is in floating mode");
    return num_[e];
}

const BigInt& Measure::denominator() const {
    require(exact_, Errc::ExactModeRequired, "measure is in floating mode");
    return den_;
}

double Measure::total() const {
    if (exact_) return exact_total().convert_to<double>();
    double t = 0;
    for (double v : dbl_) t += v;
    return t;
}

Rational Measure::exact_total() const {
    require(exact_, Errc::ExactModeRequired, "measure is in floating mode");
    BigInt s = 0;
    for (const auto& v : num_) s += v;
    return Rational(s, den_);
}

bool Measure::is_probability(double tol) const {
    if (exact_) {
        for (const auto& v : num_)
            if (v < 0) return false;
        return exact_total() == 1;
    }
    double t = 0;
    for (double v : dbl_) {
        if (v < -tol) return false;
        t += v;
    }
    return std::abs(t - 1.0) <= tol;
}

double Measure::mass(const std::vector<elem_t>& set) const {
    if (exact_) return exact_mass(set).convert_to<double>();
    double t = 0;
    for (elem_t e : set) t += dbl_[e];
    return t;
}

Rational Measure::exact_mass(const std::vector<elem_t>& set) const {
    require(exact_, Errc::ExactModeRequired, "measure is in floating mode");
    BigInt s = 0;
    for (elem_t e : set) s += num_[e];
    return Rational(s, den_);
}

std::vector<elem_t> Measure::support() const {
    std::vector<elem_t> out;
    for (elem_t e = 0; e < size(); ++e)
        if (exact_ ? (num_[e] != 0) : (dbl_[e] != 0)) out.push_back(e);
    return out;
}

double Measure::max_weight() const {
    double best = 0;
    for (elem_t e = 0; e < size(); ++e) best = std::max(best, weight(e));
    return best;
}

Measure Measure::to_floating() const {
    if (!exact_) return *this;
    Measure m(ring_, false);
    for (elem_t e = 0; e < size(); ++e) m.dbl_[e] = weight(e);
    return m;
}

void Measure::normalize() {
    if (exact_) {
        BigInt s = 0;
        for (const auto& v : num_) s += v;
        require(s != 0, Errc::BadConfig, "cannot normalize a measure of zero total mass");
        if (s < 0) {
            for (auto& v : num_) v = -v;
            s = -s;
        }
        den_ = s;
        canonicalize();
    } else {
        double t = total();
        require(t != 0, Errc::BadConfig, "cannot normalize a measure of zero total mass");
        for (auto& v : dbl_) v /= t;
    }
}

void Measure::canonicalize() {
    if (!exact_) return;
    BigInt g = den_;
    for (const auto& v : num_) {
        if (v != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
        if (g == 1) return;
    }
    for (auto& v : num_) v /= g;
    den_ /= g;
}

Measure& Measure::add_scaled(const Measure& other, const Rational& c) {
    check_same_ring(*this, other);
    require(exact_ && other.exact_, Errc::ExactModeRequired, "signed combination needs exact mode");
    BigInt cn = boost::multiprecision::numerator(c);
    BigInt cd = boost::multiprecision::denominator(c);
    // this/den + cn/cd * other/oden  over common denominator den*cd*oden
    BigInt new_den = den_ * cd * other.den_;
    for (elem_t e = 0; e < size(); ++e)
        num_[e] = num_[e] * cd * other.den_ + cn * other.num_[e] * den_;
    den_ = new_den;
    canonicalize();
    return *this;
}

Measure Measure::scaled(const Rational& c) const {
    require(exact_, Errc::ExactModeRequired, "scaling needs exact mode");
    Measure out = *this;
    BigInt cn = boost::multiprecision::numerator(c);
    BigInt cd = boost::multiprecision::denominator(c);
    for (auto& v : out.num_) v *= cn;
    out.den_ *= cd;
    out.canonicalize();
    return out;
}

bool Measure::exactly_equal(const Measure& other) const {
    check_same_ring(*this, other);
    require(exact_ && other.exact_, Errc::ExactModeRequired, "exact comparison needs exact mode");
    for (elem_t e = 0; e < size(); ++e)
        if (num_[e] * other.den_ != other.num_[e] * den_) return false;
    return true;
}

Measure Measure::reflected() const {
    const auto& R = ring();
    return mapped(ring_, [&R](elem_t e) { return R.neg(e); });
}

Measure Measure::projected(RingPtr target) const {
    const auto& R = ring();
    const QuotientRing* T = target.get();
    return mapped(std::move(target), [&R, T](elem_t e) { return R.project(*T, e); });
}

Measure add_convolve(const Measure& mu, const Measure& nu) {
    check_same_ring(mu, nu);
    const auto& R = mu.ring();
    if (mu.exact_ && nu.exact_) {
        Measure out = Measure::zero(mu.ring_, true);
        out.den_ = mu.den_ * nu.den_;
        for (elem_t a = 0; a < R.size(); ++a) {
            if (mu.num_[a] == 0) continue;
            for (elem_t b = 0; b < R.size(); ++b) {
                if (nu.num_[b] == 0) continue;
                out.num_[R.add(a, b)] += mu.num_[a] * nu.num_[b];
            }
        }
        out.canonicalize();
        return out;
    }
    Measure out = Measure::zero(mu.ring_, false);
    Measure a = mu.to_floating(), b = nu.to_floating();
    for (elem_t x = 0; x < R.size(); ++x) {
        if (a.dbl_[x] == 0) continue;
        for (elem_t y = 0; y < R.size(); ++y) {
            if (b.dbl_[y] == 0) continue;
            out.dbl_[R.add(x, y)] += a.dbl_[x] * b.dbl_[y];
        }
    }
    return out;
}

Measure mul_convolve(const Measure& mu, const Measure& nu) {
    check_same_ring(mu, nu);
    const auto& R = mu.ring();
    if (mu.exact_ && nu.exact_) {
        Measure out = Measure::zero(mu.ring_, true);
        out.den_ = mu.den_ * nu.den_;
        for (elem_t a = 0; a < R.size(); ++a) {
            if (mu.num_[a] == 0) continue;
            for (elem_t b = 0; b < R.size(); ++b) {
                if (nu.num_[b] == 0) continue;
                out.num_[R.mul(a, b)] += mu.num_[a] * nu.num_[b];
            }
        }
        out.canonicalize();
        return out;
    }
    Measure out = Measure::zero(mu.ring_, false);
    Measure a = mu.to_floating(), b = nu.to_floating();
    for (elem_t x = 0; x < R.size(); ++x) {
        if (a.dbl_[x] == 0) continue;
        for (elem_t y = 0; y < R.size(); ++y) {
            if (b.dbl_[y] == 0) continue;
            out.dbl_[R.mul(x, y)] += a.dbl_[x] * b.dbl_[y];
        }
    }
    return out;
}

Measure add_power(const Measure& mu, int r) {
    require(r >= 1, Errc::BadConfig, "additive power needs r >= 1");
    Measure out = mu;
    for (int i = 1; i < r; ++i) out = add_convolve(out, mu);
    return out;
}

Measure mul_power(const Measure& mu, int k) {
    require(k >= 1, Errc::BadConfig, "multiplicative power needs k >= 1");
    Measure out = mu;
    for (int i = 1; i < k; ++i) out = mul_convolve(out, mu);
    return out;
}

std::complex<double> fourier(const Measure& mu, const CharacterTable& chars, char_t chi) {
    require(&mu.ring() == &chars.ring(), Errc::RingMismatch, "character table of a different ring");
    std::complex<double> acc = 0;
    for (elem_t e = 0; e < mu.size(); ++e) {
        double w = mu.weight(e);
        if (w != 0) acc += w * chars.value(chi, e);
    }
    return acc;
}

std::vector<std::complex<double>> full_fourier(const Measure& mu, const CharacterTable& chars) {
    require(&mu.ring() == &chars.ring(), Errc::RingMismatch, "character table of a different ring");
    std::vector<std::complex<double>> out(size_t(mu.size()));
    std::vector<std::pair<elem_t, double>> sup;
    for (elem_t e = 0; e < mu.size(); ++e) {
        double w = mu.weight(e);
        if (w != 0) sup.emplace_back(e, w);
    }
    for (char_t chi = 0; chi < mu.size(); ++chi) {
        std::complex<double> acc = 0;
        for (auto& [e, w] : sup) acc += w * chars.value(chi, e);
        out[chi] = acc;
    }
    return out;
}

Measure measure_from_csv(RingPtr ring, std::istream& in) {
    struct Row {
        elem_t e;
        i64 n, d;
    };
    std::vector<Row> rows;
    std::string line;
    int rank = ring->rank();
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        for (auto& c : line)
            if (c == ',') c = ' ';
        std::istringstream row(line);
        std::vector<i64> coords(size_t(rank));
        for (auto& c : coords)
            require(bool(row >> c), Errc::BadConfig, "bad measure row: " + line);
        i64 n, d;
        require(bool(row >> n >> d) && d > 0, Errc::BadConfig, "bad measure weight: " + line);
        rows.push_back({ring->from_coords(coords), n, d});
    }
    require(!rows.empty(), Errc::BadConfig, "empty measure file");
    BigInt L = 1;
    for (const auto& r : rows) L = boost::multiprecision::lcm(L, BigInt(r.d));
    std::vector<BigInt> num(size_t(ring->size()), BigInt(0));
    for (const auto& r : rows) num[r.e] += BigInt(r.n) * (L / r.d);
    return Measure::from_integer_weights(std::move(ring), std::move(num), L);
}

void measure_to_csv(const Measure& mu, std::ostream& out) {
    const auto& R = mu.ring();
    for (elem_t e = 0; e < mu.size(); ++e) {
        Rational w = mu.exact() ? mu.exact_weight(e) : Rational(0);
        if (mu.exact() && w == 0) continue;
        if (!mu.exact() && mu.weight(e) == 0) continue;
        for (int i = 0; i < R.rank(); ++i) out << R.coord(e, i) << ",";
        if (mu.exact())
            out << boost::multiprecision::numerator(w) << "," << boost::multiprecision::denominator(w);
        else
            out << mu.weight(e) << ",1";
        out << "\n";
    }
}

} // namespace ringlab
