#ifndef JETCOVER_ERRORS_HPP
#define JETCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetcover {

/// Invalid input or violated precondition. The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation was refused because it exceeds a configured size bound.
/// The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two independent routes to the same result disagreed. Always a bug.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

/// Exact integer arithmetic left the machine-representable range.
class OverflowError : public DomainError {
public:
    explicit OverflowError(const std::string& msg) : DomainError(msg) {}
};

inline long long checkedAdd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline long long checkedMul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

} // namespace jetcover

#endif
