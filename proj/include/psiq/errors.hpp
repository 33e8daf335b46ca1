#ifndef PSIQ_ERRORS_HPP_
#define PSIQ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace psiq {

// Precondition violations: bad arity, zero entries, out-of-range arguments.
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A fixed-width result would not fit. Never raised for a silently wrapped value.
class OverflowError : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

// Requested tables would not fit in memory.
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace psiq

#endif // PSIQ_ERRORS_HPP_
