#ifndef CLANS_ERRORS_HPP
#define CLANS_ERRORS_HPP

#include <stdexcept>

namespace clans {

// Common base so callers can catch everything from this library at once.
class ClanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed clan text (bad character or token).
class ParseError : public ClanError {
 public:
  using ClanError::ClanError;
};

// An arc label occurs once, or more than twice.
class UnmatchedArcLabelError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Symbol counts are incompatible with the requested (p,q), or two
// operands carry different signatures.
class SignatureMismatchError : public ClanError {
 public:
  using ClanError::ClanError;
};

// Operand lengths disagree (clan text vs p+q, involutions of unequal
// size, flag dimension vs p+q).
class LengthMismatchError : public ClanError {
 public:
  using ClanError::ClanError;
};

// A rank profile that no clan realizes.
class InconsistentProfileError : public ClanError {
 public:
  using ClanError::ClanError;
};

// The closure of the covering moves disagrees with the rank-number
// order. Signals an implementation bug, never user input.
class OrderMismatchError : public ClanError {
 public:
  using ClanError::ClanError;
};

// Interval endpoints that are not related in the order.
class NotComparableError : public ClanError {
 public:
  using ClanError::ClanError;
};

// A degeneration-curve case failed one of its verification items.
class CaseMismatchError : public ClanError {
 public:
  using ClanError::ClanError;
};

// A column list that is not a basis (or otherwise not a valid flag).
class InvalidFlagError : public ClanError {
 public:
  using ClanError::ClanError;
};

}  // namespace clans

#endif  // CLANS_ERRORS_HPP
