#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Failure categories surfaced by the library. Every throwing operation
/// documents which of these it can raise.
enum class Errc {
    NonMonogenicPrime,
    ReduciblePolynomial,
    CapacityExceeded,
    NotLocalRing,
    RingMismatch,
    ExactModeRequired,
    MissingSubfieldData,
    ProfileNotConstant,
    NoAdmissibleSets,
    DensityTooLow,
    HypothesisViolated,
    BadConfig,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace ringlab
