#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Two objects that must share a degree d do not.
class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured enumeration budget or degree cap would be exceeded.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hurwitz
