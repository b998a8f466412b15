#pragma once

#include <stdexcept>
#include <string>

namespace loops {

// Base of everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: malformed tables, violated preconditions, unparseable files.
class validation_error : public error {
public:
    using error::error;
};

// A configured resource limit was hit (group cap, enumeration bound,
// search budget). Distinct from validation so callers can retry with
// larger limits.
class resource_error : public error {
public:
    using error::error;
};

// A consistency check failed that should be impossible on valid input;
// signals a bug, not a user error.
class internal_error : public error {
public:
    using error::error;
};

class not_latin_error : public validation_error {
public:
    not_latin_error(int row, int col, const std::string& msg)
        : validation_error(msg), row(row), col(col) {}
    int row;
    int col;
};

class no_identity_error : public validation_error {
public:
    using validation_error::validation_error;
};

class no_two_sided_inverse_error : public validation_error {
public:
    explicit no_two_sided_inverse_error(int element)
        : validation_error("element " + std::to_string(element) +
                           " has no two-sided inverse"),
          element(element) {}
    int element;
};

class not_power_associative_error : public validation_error {
public:
    using validation_error::validation_error;
};

class not_uniquely_2_divisible_error : public validation_error {
public:
    using validation_error::validation_error;
};

class not_a_subloop_error : public validation_error {
public:
    using validation_error::validation_error;
};

class not_normal_error : public validation_error {
public:
    using validation_error::validation_error;
};

class not_transitive_error : public validation_error {
public:
    using validation_error::validation_error;
};

class not_an_automorphism_error : public validation_error {
public:
    using validation_error::validation_error;
};

class even_order_error : public validation_error {
public:
    using validation_error::validation_error;
};

class degree_mismatch_error : public validation_error {
public:
    using validation_error::validation_error;
};

class not_prime_error : public validation_error {
public:
    using validation_error::validation_error;
};

class wright1_error : public validation_error {
public:
    explicit wright1_error(int witness)
        : validation_error("x + y - [x,y] does not define a loop: "
                           "translation maps of element " +
                           std::to_string(witness) + " are not bijective"),
          witness(witness) {}
    int witness;
};

// Named precondition failures of transforms/constructions
// (not left Bol, not automorphic, Bruck loop not an abelian group, ...).
// what() names the failed precondition.
class precondition_error : public validation_error {
public:
    using validation_error::validation_error;
};

class parse_error : public validation_error {
public:
    using validation_error::validation_error;
};

class cap_exceeded_error : public resource_error {
public:
    explicit cap_exceeded_error(std::size_t cap)
        : resource_error("group materialization exceeds cap of " +
                         std::to_string(cap) + " elements"),
          cap(cap) {}
    std::size_t cap;
};

class bound_exceeded_error : public resource_error {
public:
    using resource_error::resource_error;
};

class budget_exceeded_error : public resource_error {
public:
    using resource_error::resource_error;
};

} // namespace loops
