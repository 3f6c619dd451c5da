#pragma once

#include <stdexcept>
#include <string>

namespace entbin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The truncation cap was reached before the requested tail tolerance.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

/// Entanglement photons exceed the channel photon budget.
class EnergyBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two signal states are numerically indistinguishable.
class DegenerateEnsemble : public Error {
 public:
  using Error::Error;
};

/// A root bracket whose endpoints do not straddle a sign change.
class NoSignChange : public Error {
 public:
  using Error::Error;
};

class IterationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace entbin
