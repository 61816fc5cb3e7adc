#pragma once

#include <stdexcept>
#include <string>

namespace hypercode {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV cell, JSON document).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Shape mismatch, e.g. ragged matrix rows or an index outside [0, n).
class DimensionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Unknown level or bond id.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Level or dimension argument outside the admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

class CompositionError : public Error {
public:
    using Error::Error;
};

/// Two hyperstructures over different neuron universes.
class UniverseError : public Error {
public:
    using Error::Error;
};

/// A structural invariant does not hold (e.g. a non-monotone filtration).
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A combinatorial search exceeded its configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace hypercode
