#pragma once

#include <stdexcept>
#include <string>

namespace srlc {

/// Malformed or out-of-contract input (bad labels, non-subcomplex pairs,
/// unparsable files). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is asked for a quantity the void complex does not have.
class VoidComplexError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace srlc
