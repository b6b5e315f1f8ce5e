#pragma once

#include <stdexcept>
#include <string>

namespace difflab {

// Time argument outside the schedule's clip range (or other invalid domain).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// A conversion denominator fell below the singularity threshold.
class SingularError : public std::runtime_error {
public:
    explicit SingularError(const std::string& msg) : std::runtime_error(msg) {}
};

// v-parameterization requested on a schedule that is not variance preserving.
class VpRequiredError : public std::runtime_error {
public:
    explicit VpRequiredError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shape mismatch between operands.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// sigma_{t-1}^2 - gamma_t^2 went negative beyond tolerance in a reverse step.
class GammaOverflowError : public std::runtime_error {
public:
    explicit GammaOverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

// Linear system too ill-conditioned to trust (oracle dense path).
class IllConditionedError : public std::runtime_error {
public:
    explicit IllConditionedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training loss exceeded the divergence threshold or produced non-finite values.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration (unknown schedule name, incompatible mode, parse failure).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace difflab
