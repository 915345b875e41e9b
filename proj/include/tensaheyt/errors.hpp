#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tensaheyt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TENSAHEYT_ERROR(Name)            \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// algebra-core
TENSAHEYT_ERROR(NotAPartialOrder);
TENSAHEYT_ERROR(NotALattice);
TENSAHEYT_ERROR(NotDistributive);
TENSAHEYT_ERROR(NoRelativePseudocomplement);
TENSAHEYT_ERROR(NotAFilter);
TENSAHEYT_ERROR(NotDisjoint);

// tense-core
TENSAHEYT_ERROR(DegenerateAlgebra);
TENSAHEYT_ERROR(CarrierTooLarge);

// filters
TENSAHEYT_ERROR(CharacterizationMismatch);
TENSAHEYT_ERROR(NotATenseFilter);
TENSAHEYT_ERROR(NotACongruence);

// duality
TENSAHEYT_ERROR(SpaceAxiomViolation);
TENSAHEYT_ERROR(IsomorphismFailure);
TENSAHEYT_ERROR(NotAHomomorphism);
TENSAHEYT_ERROR(EquivalenceMismatch);

// ign-logic
TENSAHEYT_ERROR(UnboundVariable);
TENSAHEYT_ERROR(AssignmentSpaceTooLarge);

// text formats
TENSAHEYT_ERROR(FormatError);

#undef TENSAHEYT_ERROR

/// Formula text could not be parsed; carries the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownSymbol : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace tensaheyt
