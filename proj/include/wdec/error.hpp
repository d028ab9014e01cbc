#ifndef WDEC_ERROR_HPP
#define WDEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wdec {

// Every failure raised by the library carries a kind so that callers (the
// CLI in particular) can map it onto an exit code and a stage name.
enum class ErrorKind {
  input,           // malformed input, dimension mismatch, bad flag values
  singular,        // invert() on a rank-deficient matrix
  inconsistent,    // linear system without solution where one is required
  not_closed,      // multiplication table or subspace not closed
  not_associative,
  not_an_ideal,
  too_large,       // enumeration budget exceeded
  unsupported,     // e.g. a base field other than Q
  degree_cap,      // Kronecker factorisation gave up
  unresolved,      // splitting or left-ideal search exhausted its budget
  internal
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wdec

#endif  // WDEC_ERROR_HPP
