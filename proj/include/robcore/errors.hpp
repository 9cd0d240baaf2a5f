#pragma once

#include <stdexcept>
#include <string>

namespace robcore {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance or record text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An item id that is not part of the ground set.
class UnknownItem : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A constraint member behaved in a way no matroid can (e.g. no single
/// removal restores independence).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Exact computation refused because the ground set exceeds its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The coreset grew past rank + buffer capacity.
class CoresetSizeViolation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace robcore
