// Copyright 2026 The spinvqd Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spinvqd {

/// Malformed input text (FCIDUMP header, config files).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An index or value outside its admissible range.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Input entries that contradict each other.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Request would exceed the dense-matrix / statevector size limits.
class ResourceError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Valid input the implementation does not support.
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (e.g. non-Hermitian observable).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An optimization inside an iterative driver failed; the message carries the
/// driver's iteration context.
class OptimizationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace spinvqd
