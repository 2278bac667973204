#pragma once

#include <stdexcept>
#include <string>

namespace rpsp {

// Invalid configuration values (bad dimensions, negative bandwidths, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched dimensions between otherwise valid objects.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// The regularized conditioning operator became numerically singular.
struct FilterDegeneracyError : std::runtime_error {
  FilterDegeneracyError(int step_, double cond_, const std::string& what)
      : std::runtime_error(what), step(step_), cond(cond_) {}
  int step;
  double cond;
};

// Not enough data to run an initialization regression.
struct InitDataError : std::runtime_error {
  explicit InitDataError(const std::string& what) : std::runtime_error(what) {}
};

// Rank-deficient least-squares system solved without regularization.
struct SingularityError : std::runtime_error {
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// A non-finite value appeared while accumulating gradients.
struct GradientOverflowError : std::runtime_error {
  GradientOverflowError(int step_, const std::string& what)
      : std::runtime_error(what), step(step_) {}
  int step;
};

}  // namespace rpsp
