#pragma once

#include <stdexcept>
#include <string>

namespace walgebra {

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidForm : std::runtime_error {
  explicit InvalidForm(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownGenerator : std::runtime_error {
  explicit UnknownGenerator(const std::string& what) : std::runtime_error(what) {}
};

struct AxiomViolation : std::runtime_error {
  explicit AxiomViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NilpotencyFailure : std::logic_error {
  explicit NilpotencyFailure(const std::string& what) : std::logic_error(what) {}
};

struct TruncationTooSmall : std::runtime_error {
  explicit TruncationTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NonHomogeneous : std::runtime_error {
  explicit NonHomogeneous(const std::string& what) : std::runtime_error(what) {}
};

struct FiltrationMismatch : std::runtime_error {
  explicit FiltrationMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct JacobiViolation : std::runtime_error {
  explicit JacobiViolation(const std::string& what) : std::runtime_error(what) {}
};

struct MiuraMismatch : std::runtime_error {
  explicit MiuraMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotVirasoro : std::runtime_error {
  explicit NotVirasoro(const std::string& what) : std::runtime_error(what) {}
};

struct ClosureFailure : std::runtime_error {
  explicit ClosureFailure(const std::string& what) : std::runtime_error(what) {}
};

struct CriticalLevel : std::runtime_error {
  explicit CriticalLevel(const std::string& what) : std::runtime_error(what) {}
};

struct CapInsufficient : std::runtime_error {
  explicit CapInsufficient(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace walgebra
