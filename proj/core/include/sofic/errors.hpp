#ifndef SOFIC_ERRORS_HPP_
#define SOFIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sofic {

/// Error categories surfaced by the library.  The CLI maps these to exit
/// codes: BudgetExceeded -> 3, everything else -> 2.
enum class ErrorKind {
  ParseError,
  NotRightResolving,
  EmptyShift,
  LetterNotInAlphabet,
  LetterCollision,
  NotProlongable,
  GensDoNotGenerate,
  BoundTooSmall,
  NotIrreducible,
  NotAPreorder,
  BudgetExceeded,
  InvalidSemigroup,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sofic

#endif  // SOFIC_ERRORS_HPP_
