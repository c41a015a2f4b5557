#ifndef PRIPS_ERRORS_HPP
#define PRIPS_ERRORS_HPP

#include <stdexcept>

namespace prips {

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact search would exceed its fixed size bound.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace prips

#endif  // PRIPS_ERRORS_HPP
