// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tpq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-facing parameters (lattice, circuit spec, config).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Requested Hilbert space exceeds the dense backend limit.
class DimensionOverflow : public Error {
 public:
  using Error::Error;
};

/// Qubit index outside the register.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Post-selected branch has (numerically) vanishing probability.
class ZeroProbability : public Error {
 public:
  using Error::Error;
};

/// A matrix entry handed to the block encoder lies outside [-1, 1].
class EntryOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The regularized QITE normal equations could not be solved.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace tpq
