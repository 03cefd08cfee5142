#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphquad {

/// Input point is too far from the unit sphere to be silently renormalized.
class NotUnitError : public std::runtime_error {
public:
    explicit NotUnitError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Optimizer failed to reach the requested residual.
class NonConvergedError : public std::runtime_error {
public:
    NonConvergedError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what + ": residual " + std::to_string(residual) + " after " +
                             std::to_string(iterations) + " iterations"),
          residual_(residual),
          iterations_(iterations) {}
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    double residual_;
    int iterations_;
};

/// Gram matrix numerically rank-deficient where a well-posed one was required.
class SingularGramError : public std::runtime_error {
public:
    explicit SingularGramError(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature node with nonzero weight landed on the integrand singularity.
class SingularHitError : public std::runtime_error {
public:
    SingularHitError(const std::string& what, std::size_t node)
        : std::runtime_error(what + " (node " + std::to_string(node) + ")"), node_(node) {}
    std::size_t node() const { return node_; }

private:
    std::size_t node_;
};

/// Integrand returned NaN/Inf at a node.
class NonFiniteValueError : public std::runtime_error {
public:
    NonFiniteValueError(const std::string& what, std::size_t node)
        : std::runtime_error(what + " (node " + std::to_string(node) + ")"), node_(node) {}
    std::size_t node() const { return node_; }

private:
    std::size_t node_;
};

/// Worst-case-error radicand came out negative beyond roundoff tolerance.
class NegativeRadicandError : public std::runtime_error {
public:
    NegativeRadicandError(const std::string& what, double radicand)
        : std::runtime_error(what + ": " + std::to_string(radicand)), radicand_(radicand) {}
    double radicand() const { return radicand_; }

private:
    double radicand_;
};

/// Point set contains coincident points where distinctness is required.
class DuplicatePointsError : public std::runtime_error {
public:
    DuplicatePointsError(const std::string& what, std::size_t i, std::size_t j)
        : std::runtime_error(what + " (nodes " + std::to_string(i) + ", " + std::to_string(j) + ")"),
          i_(i),
          j_(j) {}
    std::size_t first() const { return i_; }
    std::size_t second() const { return j_; }

private:
    std::size_t i_;
    std::size_t j_;
};

}  // namespace sphquad
