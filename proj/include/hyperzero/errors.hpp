#pragma once

#include <stdexcept>
#include <string>

namespace hz {

// Base class for every failure the engine can signal.  Each concrete
// subclass corresponds to one distinct mathematical or usage error.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
  explicit DivisionByZero(const std::string& msg = "division by a null octonion")
      : Error(msg) {}
};

class DivisionByZeroPoly : public Error {
public:
  explicit DivisionByZeroPoly(const std::string& msg = "division by the zero polynomial")
      : Error(msg) {}
};

class InvalidClass : public Error {
public:
  explicit InvalidClass(const std::string& msg) : Error(msg) {}
};

// The normal series came out with a non-negligible imaginary residual.
// This can only happen if the arithmetic itself is broken.
class RealityViolation : public Error {
public:
  explicit RealityViolation(const std::string& msg) : Error(msg) {}
};

class RadiusViolation : public Error {
public:
  explicit RadiusViolation(const std::string& msg) : Error(msg) {}
};

class DegreeZero : public Error {
public:
  explicit DegreeZero(const std::string& msg = "operation requires degree >= 1")
      : Error(msg) {}
};

// A sphere that must meet the zero set (it divides the normal polynomial)
// classified as empty; numerical inconsistency.
class ClassificationMismatch : public Error {
public:
  explicit ClassificationMismatch(const std::string& msg) : Error(msg) {}
};

class FtaViolation : public Error {
public:
  explicit FtaViolation(const std::string& msg) : Error(msg) {}
};

class NoZeroFound : public Error {
public:
  explicit NoZeroFound(const std::string& msg) : Error(msg) {}
};

// A camshaft formula denominator vanished although the theorem forbids it.
class DegenerateDenominator : public Error {
public:
  explicit DegenerateDenominator(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace hz
