#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// A caller-side contract was violated (bad q, bad flag, malformed file).
// The CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computed quantity failed a self-consistency check. Exit status 1.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cyclo
