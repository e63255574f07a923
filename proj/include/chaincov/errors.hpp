#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaincov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element index (or a count bound) was out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// The input relation is not a strict order; `cycle()` lists a violating cycle
/// u0 < u1 < ... < uk < u0 (a single element for a reflexive pair).
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::size_t> cycle);
  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

class EmptyPosetError : public Error {
 public:
  EmptyPosetError() : Error("operation undefined on the empty poset") {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class MalformedDecomposition : public Error {
 public:
  using Error::Error;
};

/// Signals a library bug: two independent computations disagreed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Malformed poset text or ideal file; `line()` is 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chaincov
