#pragma once

#include <stdexcept>
#include <string>

namespace angleset {

// Input violates a documented precondition (bad ids, broken rotation, bad file).
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside what an algorithm handles (degree too high,
// self-loops where a simple graph is required, ...).
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A size cap of an exhaustive routine was exceeded.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// A supplied witness graph turned out to have a cover, or could not be confirmed.
class InvalidWitness : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace angleset
