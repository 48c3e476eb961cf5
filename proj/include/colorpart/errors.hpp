#ifndef COLORPART_ERRORS_HPP
#define COLORPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace colorpart {

// Precondition violations (zero denominators, bad constant terms, n == 0)
// are reported as std::domain_error. The two types below cover the rest.

/// A cost or size guard on an exponential-time or oracle routine was exceeded.
class guard_error : public std::invalid_argument {
 public:
  explicit guard_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Two computations that must agree exactly did not, or an exact division
/// left a remainder. Always indicates a bug.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace colorpart

#endif  // COLORPART_ERRORS_HPP
