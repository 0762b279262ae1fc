#pragma once

#include <stdexcept>
#include <string>

namespace sl2coh {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A number that was required to be prime is not.
class not_prime : public error {
public:
    explicit not_prime(const std::string& what) : error(what) {}
};

// Malformed weight: unparsable text, digit out of range, negative value,
// or a value too large for the requested fixed-width conversion.
class invalid_weight : public error {
public:
    explicit invalid_weight(const std::string& what) : error(what) {}
};

// A single base-p digit outside the range [0, p-1] was passed to an
// operation that works digitwise.
class invalid_digit : public error {
public:
    explicit invalid_digit(const std::string& what) : error(what) {}
};

// Two objects living over different characteristics were combined.
class char_mismatch : public error {
public:
    explicit char_mismatch(const std::string& what) : error(what) {}
};

// A formal character is not a non-negative integer combination of
// irreducible characters.
class not_a_module_character : public error {
public:
    explicit not_a_module_character(const std::string& what) : error(what) {}
};

// Cohomological degree outside the range this library computes.
class unsupported_degree : public error {
public:
    explicit unsupported_degree(const std::string& what) : error(what) {}
};

// Two supposedly equivalent computations disagreed, or a structural
// invariant of the computation failed. Indicates a bug, never bad input.
class internal_inconsistency : public error {
public:
    explicit internal_inconsistency(const std::string& what) : error(what) {}
};

// A spectral-sequence page mixes contributions of both parities.
class mixed_parity : public internal_inconsistency {
public:
    explicit mixed_parity(const std::string& what) : internal_inconsistency(what) {}
};

} // namespace sl2coh
