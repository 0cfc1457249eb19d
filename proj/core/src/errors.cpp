#include "ringlab/errors.hpp"

namespace ringlab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonMonogenicPrime: return "NonMonogenicPrime";
        case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
        case Errc::CapacityExceeded: return "CapacityExceeded";
        case Errc::NotLocalRing: return "NotLocalRing";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::ExactModeRequired: return "ExactModeRequired";
        case Errc::MissingSubfieldData: return "MissingSubfieldData";
        case Errc::ProfileNotConstant: return "ProfileNotConstant";
        case Errc::NoAdmissibleSets: return "NoAdmissibleSets";
        case Errc::DensityTooLow: return "DensityTooLow";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::BadConfig: return "BadConfig";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace ringlab
