#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghkit {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data is malformed (wrong shape, non-finite values, duplicate points).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

enum class Axiom { M1, M2, M3, M4 };

const char* axiom_name(Axiom a);

/// A metric axiom fails beyond tolerance. `k` is only meaningful for M4.
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::size_t i, std::size_t j, std::size_t k = 0);

  Axiom axiom() const { return axiom_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

 private:
  Axiom axiom_;
  std::size_t i_, j_, k_;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class InvalidCorrespondence : public Error {
 public:
  using Error::Error;
};

/// Exhaustive searches refuse inputs above a configurable point count.
class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(std::size_t n, std::size_t m, std::size_t guard);
};

/// Integer recursions refuse arguments that would overflow 64 bits.
class OverflowGuard : public Error {
 public:
  using Error::Error;
};

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A cover-combination hypothesis does not hold on the sample.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::string which, const std::string& detail);
  const std::string& which() const { return which_; }

 private:
  std::string which_;
};

class ClassCountMismatch : public Error {
 public:
  using Error::Error;
};

class CertificateUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace ghkit
