#include "sofic/errors.hpp"

namespace sofic {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotRightResolving: return "NotRightResolving";
    case ErrorKind::EmptyShift: return "EmptyShift";
    case ErrorKind::LetterNotInAlphabet: return "LetterNotInAlphabet";
    case ErrorKind::LetterCollision: return "LetterCollision";
    case ErrorKind::NotProlongable: return "NotProlongable";
    case ErrorKind::GensDoNotGenerate: return "GensDoNotGenerate";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotAPreorder: return "NotAPreorder";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidSemigroup: return "InvalidSemigroup";
  }
  return "Error";
}

}  // namespace sofic
