#pragma once

#include <stdexcept>
#include <string>

namespace rabiqpt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// Coherent-state amplitude beyond the photon cutoff is too large to drop.
class TailTooHeavy : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Bessel order or argument outside the documented accuracy envelope.
class OutOfEnvelope : public Error {
 public:
  using Error::Error;
};

class M0Zero : public Error {
 public:
  using Error::Error;
};

class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

// The ground-state minimizer sits on the last candidate level, so the
// candidate set was probably truncated too early.
class CutoffSuspect : public Error {
 public:
  using Error::Error;
};

// Convergence guard of the time-dependent propagator failed.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace rabiqpt
