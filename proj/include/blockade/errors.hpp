#pragma once

#include <stdexcept>
#include <string>

namespace blockade {

enum class ErrorKind {
    ParseError,
    PreconditionViolated,
    DegenerateInput,
    InternalInvariantViolated,
    SamplingBudgetExhausted,
    FinderContractBreach,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& w) { return Error(ErrorKind::ParseError, w); }
inline Error precondition_violated(const std::string& w) {
    return Error(ErrorKind::PreconditionViolated, w);
}
inline Error degenerate_input(const std::string& w) {
    return Error(ErrorKind::DegenerateInput, w);
}
inline Error internal_invariant_violated(const std::string& w) {
    return Error(ErrorKind::InternalInvariantViolated, w);
}
inline Error sampling_budget_exhausted(const std::string& w) {
    return Error(ErrorKind::SamplingBudgetExhausted, w);
}
inline Error finder_contract_breach(const std::string& w) {
    return Error(ErrorKind::FinderContractBreach, w);
}

}  // namespace blockade
