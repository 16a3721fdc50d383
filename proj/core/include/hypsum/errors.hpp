#pragma once

#include <stdexcept>

namespace hypsum {

/// Input outside an operation's domain (zero denominator, empty gcd, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A series coefficient or rational-function value hits a pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Non-terminating series requested at |x| >= 1, where its value is not
/// determined by the series alone.
struct IllDefinedError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An evaluator was called on parameters of the wrong classification.
struct ClassificationError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace hypsum
