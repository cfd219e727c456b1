#pragma once

#include <stdexcept>
#include <string>

namespace socular {

/// Input outside an operation's domain: wrong parity, weight not p-dominant,
/// composition that does not sum to n, and so on.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class integrity_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed textual input (weights, partitions, integer lists).
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace socular
