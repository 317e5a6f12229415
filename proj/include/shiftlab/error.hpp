#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

// Malformed input, dimension mismatch, unsupported shape, ...
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact search refused to run because the instance is over its cap.
class CapExceeded : public InputError {
public:
    using InputError::InputError;
};

// A precondition of a theorem check does not hold for the given input.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A checked theorem failed on a concrete instance. Never expected.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require_input(bool cond, const std::string& what) {
    if (!cond) throw InputError(what);
}

}  // namespace shiftlab
