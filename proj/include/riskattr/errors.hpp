// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace riskattr {

/// Precondition or invariant breach on a public API (bad names, non-finite
/// inputs, mismatched dimensions, ...).
class contract_violation : public std::invalid_argument {
 public:
  explicit contract_violation(const std::string& what) : std::invalid_argument(what) {}
};

/// Dataset too small for the requested operation.
class insufficient_data_error : public std::runtime_error {
 public:
  explicit insufficient_data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Training objective became non-finite.
class divergence_error : public std::runtime_error {
 public:
  divergence_error(const std::string& what, std::size_t iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration(iteration) {}
  std::size_t iteration;
};

/// A model lacks a capability the caller asked for (e.g. an analytic
/// gradient); the message names the workaround.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// Feature count above the exact-enumeration cap.
class size_limit_error : public std::runtime_error {
 public:
  explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Option chain too sparse for a model-free variance integral.
class insufficient_chain_error : public std::runtime_error {
 public:
  explicit insufficient_chain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

/// Well-formed input whose values break a domain invariant.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riskattr
