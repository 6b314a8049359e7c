#ifndef XGS_ERRORS_HPP
#define XGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xgs {

// Thrown when a state or operator product leaves too much weight near the
// truncation edge of the Fock space.
class truncation_error : public std::runtime_error {
 public:
  explicit truncation_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a conditional projection has (numerically) zero weight.
class degenerate_outcome_error : public std::runtime_error {
 public:
  explicit degenerate_outcome_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a requested gate has no physical realization in the scheme.
class unreachable_gate_error : public std::domain_error {
 public:
  explicit unreachable_gate_error(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace xgs

#endif
