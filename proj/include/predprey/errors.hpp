#ifndef PREDPREY_ERRORS_HPP
#define PREDPREY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace predprey {

/// Negative densities, out-of-range arguments and the like.
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string &msg) : std::domain_error(msg) {}
};

/// No positive coexistence state exists for the given parameters.
class NoCoexistenceError : public std::runtime_error {
  public:
    explicit NoCoexistenceError(const std::string &msg) : std::runtime_error(msg) {}
};

/// More than one positive equilibrium root; carries all of them.
class AmbiguousRootsError : public std::runtime_error {
  public:
    AmbiguousRootsError(const std::string &msg, std::vector<double> r)
        : std::runtime_error(msg), roots(std::move(r)) {}
    std::vector<double> roots;
};

/// Operation does not apply to the given model (e.g. eta = 0).
class NotApplicableError : public std::runtime_error {
  public:
    explicit NotApplicableError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Mode truncation too small to certify a threshold.
class TruncationError : public std::runtime_error {
  public:
    explicit TruncationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Config file problem; line = 0 means "whole file".
class ValidationError : public std::runtime_error {
  public:
    ValidationError(const std::string &msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

} // namespace predprey

#endif
