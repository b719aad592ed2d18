#pragma once

// Error taxonomy for the a3b tiling library.
//
// The three base categories map onto the CLI exit codes:
//   domain_error     -> exit 2 (invalid arguments / out-of-range parameters)
//   numeric_error    -> exit 3 (closure, root-finding, singular configurations)
//   validation_error -> exit 1 (a tiling failed structural or arithmetic checks)

#include <stdexcept>
#include <string>

namespace a3b {

// Invalid parameters or requests outside the mathematical domain of an
// operation (bad f, beta outside its interval, excluded family points, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A parameter hit a point where the family itself degenerates (excluded
// values such as the rhombus reduction, or an identically-zero residual).
class degeneracy_error : public domain_error {
public:
    explicit degeneracy_error(const std::string& what) : domain_error(what) {}
};

// Numeric failure: a walk did not close, propagation was inconsistent,
// root-finding failed, or a formula was evaluated at a singular configuration.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// A formula was asked for at a configuration where it divides by ~0
// (e.g. the cos a expressions at alpha = 1 or delta = 1).
class singular_error : public numeric_error {
public:
    explicit singular_error(const std::string& what) : numeric_error(what) {}
};

// A tiling (or serialized tiling file) failed validation.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace a3b
