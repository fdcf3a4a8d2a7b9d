#pragma once

#include <stdexcept>
#include <string>

namespace qk {

/// Base of all evaluator errors; carries a stable name for reports
/// and CLI stderr output.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define QK_DEFINE_ERROR(E)                                        \
    class E : public Error {                                      \
    public:                                                       \
        explicit E(const std::string& msg) : Error(#E, msg) {}    \
    }

QK_DEFINE_ERROR(DomainError);
QK_DEFINE_ERROR(TruncationExceeded);
QK_DEFINE_ERROR(PoleAtOmega);
QK_DEFINE_ERROR(PoleInDenominator);
QK_DEFINE_ERROR(Divergent);
QK_DEFINE_ERROR(SlowConvergence);
QK_DEFINE_ERROR(NoConvergence);
QK_DEFINE_ERROR(NonFinite);
QK_DEFINE_ERROR(DegenerateEndpoints);
QK_DEFINE_ERROR(HypothesisViolated);
QK_DEFINE_ERROR(ThetaZero);

#undef QK_DEFINE_ERROR

}  // namespace qk
