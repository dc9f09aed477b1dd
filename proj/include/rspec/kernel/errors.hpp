#pragma once

#include <stdexcept>
#include <string>

namespace rspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested computation is not available over this ring
/// (e.g. Groebner bases over a polynomial ring with integer coefficients).
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

/// Smith normal form requested over a ring that is not a PID
/// (or a quotient of one).
class NotPID : public Error {
 public:
  using Error::Error;
};

/// No complete candidate-prime strategy applies; the caller must supply
/// a candidate list.
class NeedCandidates : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
  using Error::Error;
};

/// A module map whose lift does not carry source relations into the
/// target relations.
class IllDefinedMap : public Error {
 public:
  using Error::Error;
};

/// A chain computation hit its hard iteration cap.
class IterationCap : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration exceeded its configured budget.
class ExplosionGuard : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotIntegerRing : public Error {
 public:
  NotIntegerRing() : Error("operation requires the ring of integers") {}
  using Error::Error;
};

}  // namespace rspec
