#pragma once

#include <stdexcept>
#include <string>

namespace geoberg {

/** Base class for all failures raised by the library proper.
    Configuration problems are reported separately (ConfigError) so the
    command-line driver can map the two families to distinct exit codes. */
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/** A candidate metric left the space of positively curved ones:
    the fiber potential fails strict convexity somewhere on the scan grid. */
class PositivityViolation : public NumericError {
public:
    explicit PositivityViolation(const std::string& msg) : NumericError(msg) {}
};

/** A symplectic potential is not convex, so its Legendre transform
    back to a fiber potential is ill-posed. */
class ConvexityViolation : public NumericError {
public:
    explicit ConvexityViolation(const std::string& msg) : NumericError(msg) {}
};

class NonPositiveEntry : public NumericError {
public:
    explicit NonPositiveEntry(const std::string& msg) : NumericError(msg) {}
};

class NotPositiveDefinite : public NumericError {
public:
    explicit NotPositiveDefinite(const std::string& msg) : NumericError(msg) {}
};

class EigenFailure : public NumericError {
public:
    explicit EigenFailure(const std::string& msg) : NumericError(msg) {}
};

/** Estimated condition number of a dense inner-product matrix exceeds the
    trust threshold; results from the dense eigenpath would be garbage. */
class ConditioningError : public NumericError {
public:
    explicit ConditioningError(const std::string& msg) : NumericError(msg) {}
};

class DegenerateMetric : public NumericError {
public:
    explicit DegenerateMetric(const std::string& msg) : NumericError(msg) {}
};

class GridMismatch : public NumericError {
public:
    explicit GridMismatch(const std::string& msg) : NumericError(msg) {}
};

class NotSummable : public NumericError {
public:
    explicit NotSummable(const std::string& msg) : NumericError(msg) {}
};

class OutOfDomain : public NumericError {
public:
    explicit OutOfDomain(const std::string& msg) : NumericError(msg) {}
};

} // namespace geoberg
