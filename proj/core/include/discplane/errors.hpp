#pragma once

#include <stdexcept>
#include <string>

namespace discplane {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two values could not be ordered before the precision cap was reached.
class UndecidableComparison : public Error {
 public:
  using Error::Error;
};

class UnsupportedScalar : public Error {
 public:
  using Error::Error;
};

class IncommensurableInputs : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSorted : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class ExpansionTooShort : public Error {
 public:
  using Error::Error;
};

class WindowTooLarge : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Raised when a checked mathematical invariant fails; always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace discplane
