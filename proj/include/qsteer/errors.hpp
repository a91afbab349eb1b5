#pragma once

#include <stdexcept>
#include <string>

namespace qsteer {

/// Base class for every validation failure raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input matrix is not Hermitian within tolerance. Carries the measured
/// max |M - M^dagger| deviation.
class NonHermitianError : public Error {
 public:
  explicit NonHermitianError(double deviation)
      : Error("NonHermitian: max |entry - conj(transposed entry)| = " +
              std::to_string(deviation)),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class NonUnitTraceError : public Error {
 public:
  explicit NonUnitTraceError(double deviation)
      : Error("NonUnitTrace: |Tr - 1| = " + std::to_string(deviation)),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

class NotPositiveError : public Error {
 public:
  explicit NotPositiveError(double min_eigenvalue)
      : Error("NotPositive: min eigenvalue = " + std::to_string(min_eigenvalue)),
        min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& what)
      : Error("DimensionMismatch: " + what) {}
};

class NonOrthogonalRotationError : public Error {
 public:
  explicit NonOrthogonalRotationError(double deviation)
      : Error("NonOrthogonalRotation: max |R R^T - I| = " + std::to_string(deviation)) {}
};

class ImaginaryExpectationError : public Error {
 public:
  explicit ImaginaryExpectationError(double imag)
      : Error("ImaginaryExpectation: |Im Tr(rho O)| = " + std::to_string(imag)) {}
};

/// The steered party's observable list does not form a complete LOO set,
/// so the d-1 uncertainty bound would not apply.
class PartialBobSetError : public Error {
 public:
  explicit PartialBobSetError(const std::string& what)
      : Error("PartialBobSet: " + what) {}
};

/// Covariance blocks violate kernel containment (null vector of the local
/// block not annihilated by the correlation block).
class MalformedBlocksError : public Error {
 public:
  explicit MalformedBlocksError(const std::string& what)
      : Error("MalformedBlocks: " + what) {}
};

class UnphysicalError : public Error {
 public:
  explicit UnphysicalError(const std::string& what)
      : Error("Unphysical: " + what) {}
};

class NoViolationInRangeError : public Error {
 public:
  explicit NoViolationInRangeError(const std::string& what)
      : Error("NoViolationInRange: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

}  // namespace qsteer
