#pragma once

#include <stdexcept>
#include <string>

namespace laxforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments or text that does not parse.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The simple-root system used here only exists for m > 2.
class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

/// A JSON document does not match the expected layout.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An algebraic relation that must hold does not.
class RelationViolation : public Error {
 public:
  RelationViolation(std::string relation, const std::string& detail)
      : Error("relation violated: " + relation + (detail.empty() ? "" : " (" + detail + ")")),
        relation_(std::move(relation)) {}

  const std::string& relation() const noexcept { return relation_; }

 private:
  std::string relation_;
};

/// Evaluation hit a zero of a denominator.
class PoleError : public Error {
 public:
  explicit PoleError(std::string denominator)
      : Error("pole: denominator " + denominator + " vanishes"), denominator_(std::move(denominator)) {}

  const std::string& denominator() const noexcept { return denominator_; }

 private:
  std::string denominator_;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

}  // namespace laxforge
