#ifndef CUDLAB_ERRORS_HPP
#define CUDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cudlab {

/// Input is well-formed but outside the domain of the operation
/// (e.g. a non-alternating word passed to a bijection).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed text, or cycles that repeat or miss an element.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown family, statistic, sequence or map name.
class UnknownName : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds an enumeration or truncation cap.
class CapExceeded : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

} // namespace cudlab

#endif // CUDLAB_ERRORS_HPP
