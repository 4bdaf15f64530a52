#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dnt {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input document violates its schema or a type invariant.
/// Carries the path of the offending field, e.g. "scale[2].tfn".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A domain precondition failed at computation time.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroArea : public DomainError {
 public:
  using DomainError::DomainError;
};
class EmptyInput : public DomainError {
 public:
  using DomainError::DomainError;
};
class LengthMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};
class FrameMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};
class TotalConflict : public DomainError {
 public:
  using DomainError::DomainError;
};
class TotalExclusiveConflict : public DomainError {
 public:
  using DomainError::DomainError;
};
class MassOverflow : public DomainError {
 public:
  using DomainError::DomainError;
};
class NegativeMass : public DomainError {
 public:
  using DomainError::DomainError;
};
class EmptyFocal : public DomainError {
 public:
  using DomainError::DomainError;
};
class WeightSumInvalid : public DomainError {
 public:
  using DomainError::DomainError;
};
class UnknownLabel : public DomainError {
 public:
  using DomainError::DomainError;
};
class EmptyVotes : public DomainError {
 public:
  using DomainError::DomainError;
};
class NoInformation : public DomainError {
 public:
  using DomainError::DomainError;
};
class DegenerateWeight : public DomainError {
 public:
  using DomainError::DomainError;
};
class IndexOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A full-game run is missing one or more evaluation cases.
class IncompleteCoverage : public DomainError {
 public:
  explicit IncompleteCoverage(std::vector<std::string> missing)
      : DomainError(format(missing)), missing_(std::move(missing)) {}
  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  static std::string format(const std::vector<std::string>& missing) {
    std::string s = "missing evaluation cases:";
    for (const auto& m : missing) s += " " + m;
    return s;
  }
  std::vector<std::string> missing_;
};

}  // namespace dnt
