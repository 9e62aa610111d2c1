#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negotia {

/// Bad or missing configuration (unknown card key, empty grid axis, ...).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed persisted data. Carries a locus (file, byte offset and/or
/// field path) so the failing spot can be named in diagnostics.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::string locus, std::size_t byte_offset = 0)
      : std::runtime_error(what + " (at " + locus +
                           (byte_offset ? ", byte " + std::to_string(byte_offset) : "") + ")"),
        locus_(std::move(locus)),
        byte_offset_(byte_offset) {}

  const std::string& locus() const noexcept { return locus_; }
  std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
  std::string locus_;
  std::size_t byte_offset_;
};

/// Structurally valid input that violates a domain contract
/// (option index out of range, degenerate treatment arm, ...).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Remote backend failure after the retry budget is spent.
class BackendError : public std::runtime_error {
public:
  explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical optimizer failed to converge. Carries the final residual.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

}  // namespace negotia
