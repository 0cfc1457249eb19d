#include "ringlab/character.hpp"

#include <set>

#include "ringlab/errors.hpp"

namespace ringlab {

CharacterTable::CharacterTable(RingPtr ring) : ring_(std::move(ring)) {
    const auto& R = *ring_;
    M_ = R.additive_orders().back();
    for (i64 m : R.additive_orders()) weights_.push_back(M_ / m);
    roots_.resize(size_t(M_));
    for (i64 r = 0; r < M_; ++r) {
        double t = 2.0 * 3.14159265358979323846 * double(r) / double(M_);
        roots_[size_t(r)] = {std::cos(t), std::sin(t)};
    }
    for (int i = 0; i < R.rank(); ++i) {
        std::vector<i64> c(size_t(R.rank()), 0);
        c[size_t(i)] = 1;
        basis_elems_.push_back(R.from_coords(c));
    }
    // minimal nonzero ideal piece of each local component, embedded
    if (R.is_local()) {
        min_ideals_.push_back(R.ideal_power_members(R.exponent() - 1));
    } else {
        for (size_t i = 0; i < R.component_count(); ++i) {
            RingPtr comp = R.component_ring(i);
            std::vector<elem_t> parts(R.component_count(), 0);
            std::vector<elem_t> members;
            for (elem_t y : comp->ideal_power_members(comp->exponent() - 1)) {
                parts[i] = y;
                members.push_back(R.crt_recombine(parts));
            }
            min_ideals_.push_back(std::move(members));
        }
    }
}

i64 CharacterTable::pairing_num(char_t chi, elem_t x) const {
    const auto& R = *ring_;
    i128 acc = 0;
    for (int i = 0; i < R.rank(); ++i)
        acc += i128(R.coord(chi, i)) * R.coord(x, i) % M_ * weights_[size_t(i)];
    return mod_floor(i64(acc % M_), M_);
}

char_t CharacterTable::scaled(elem_t y, char_t chi) const {
    const auto& R = *ring_;
    std::vector<i64> c(size_t(R.rank()));
    for (int j = 0; j < R.rank(); ++j) {
        i64 r = pairing_num(chi, R.mul(y, basis_elems_[size_t(j)]));
        i64 m = R.additive_orders()[size_t(j)];
        i128 t = i128(r) * m;
        require(t % M_ == 0, Errc::Internal, "dual module action left the character lattice");
        c[size_t(j)] = i64(t / M_) % m;
    }
    return R.from_coords(c);
}

bool CharacterTable::is_primitive(char_t chi) const {
    for (const auto& members : min_ideals_) {
        bool nontrivial = false;
        for (elem_t g : members)
            if (pairing_num(chi, g) != 0) {
                nontrivial = true;
                break;
            }
        if (!nontrivial) return false;
    }
    return true;
}

std::vector<char_t> CharacterTable::primitive_characters() const {
    std::vector<char_t> out;
    for (char_t chi = 0; chi < size(); ++chi)
        if (is_primitive(chi)) out.push_back(chi);
    return out;
}

u64 CharacterTable::dual_orbit_size(char_t chi) const {
    std::set<char_t> orbit;
    for (elem_t y = 0; y < ring_->size(); ++y) orbit.insert(scaled(y, chi));
    return orbit.size();
}

} // namespace ringlab
