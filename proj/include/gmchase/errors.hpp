#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmchase {

// Domain-level failure codes. The CLI maps any DomainError to exit code 1
// and prints one line: "error: <code name>: <message>".
enum class errc {
    negative_count,
    length_mismatch,
    out_of_range,
    non_injective,
    not_faithful,
    internal_cycle,
    invalid_phi,
    invalid_psi,
    no_termination,
    no_faithful,
    too_large,
    support_mismatch,
    degenerate_support,
};

constexpr std::string_view errc_name(errc code) noexcept {
    switch (code) {
        case errc::negative_count: return "NegativeCount";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::out_of_range: return "OutOfRange";
        case errc::non_injective: return "NonInjective";
        case errc::not_faithful: return "NotFaithful";
        case errc::internal_cycle: return "InternalCycle";
        case errc::invalid_phi: return "InvalidPhi";
        case errc::invalid_psi: return "InvalidPsi";
        case errc::no_termination: return "NoTermination";
        case errc::no_faithful: return "NoFaithful";
        case errc::too_large: return "TooLarge";
        case errc::support_mismatch: return "SupportMismatch";
        case errc::degenerate_support: return "DegenerateSupport";
    }
    return "UnknownError";
}

class DomainError : public std::runtime_error {
public:
    DomainError(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw DomainError(code, message);
}

}  // namespace gmchase
