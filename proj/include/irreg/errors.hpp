#pragma once

#include <stdexcept>
#include <string>

namespace irreg {

/// Rejected graph construction (bad vertex, repeated edge, self-loop, bad size).
class GraphError : public std::invalid_argument {
public:
    enum class Kind { VertexOutOfRange, DuplicateEdge, SelfLoop, InvalidSize, MissingEdge };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Malformed graph6 input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size-capped routine was asked for more than it supports.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Iterative eigenvalue routine did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, long iterations, double residual)
        : std::runtime_error(what), iterations_(iterations), residual_(residual) {}

    long iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    long iterations_;
    double residual_;
};

}  // namespace irreg
