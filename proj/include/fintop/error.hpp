#pragma once

#include <stdexcept>
#include <string>

namespace fintop {

enum class ErrorKind {
    missing_empty_or_full,
    not_closed_under_union,
    not_closed_under_intersection,
    not_a_group,
    not_in_kernel,
    isolated_vertex,
    too_few_edges,
    ambiguous_incidence,
    verification_failed,
    bad_input,
    search_bound_exceeded,
    order_bound_exceeded,
    bound_exceeded,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Rejected input: malformed files, broken axioms, violated preconditions. CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configured search or size limit was hit. CLI exit code 2.
class BoundError : public Error {
public:
    using Error::Error;
};

} // namespace fintop
