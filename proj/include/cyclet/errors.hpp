#pragma once

#include <stdexcept>
#include <string>

namespace cyclet {

/// Invalid construction parameters or out-of-domain arguments.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iteration reached its cap without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No bound level exists for the requested parameters.
/// Carries the lowest energy seen while scanning, as a diagnostic.
class NoBoundState : public std::runtime_error {
 public:
  NoBoundState(const std::string& what, double best_energy)
      : std::runtime_error(what), best_energy(best_energy) {}

  double best_energy;
};

}  // namespace cyclet
