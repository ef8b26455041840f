#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace opsplit {

/// Base class for solver failures that a driver should report rather than
/// treat as programming errors. Precondition violations use
/// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag, e.g. "BlowupDetected".
  virtual const char* kind() const noexcept { return "Error"; }
};

/// An H^sigma norm grew past the configured multiple of its initial value,
/// i.e. the Burgers flow is approaching gradient blow-up.
class BlowupDetected : public Error {
public:
  BlowupDetected(const std::string& what, double norm, double limit,
                 std::optional<std::size_t> step = std::nullopt);

  const char* kind() const noexcept override { return "BlowupDetected"; }

  double norm() const noexcept { return norm_; }
  double limit() const noexcept { return limit_; }
  /// Index of the composite step that failed, when known.
  std::optional<std::size_t> step() const noexcept { return step_; }

  BlowupDetected at_step(std::size_t step) const;

private:
  double norm_;
  double limit_;
  std::optional<std::size_t> step_;
};

/// Too few admitted points to fit a convergence slope.
class FitUnreliable : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "FitUnreliable"; }
};

/// A spectral inequality check produced a zero right-hand side with a
/// nonzero left-hand side.
class InequalitySetupError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "InequalitySetupError"; }
};

}  // namespace opsplit
