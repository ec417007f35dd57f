#pragma once

#include <stdexcept>
#include <string>

namespace kinklab {

// Thrown when the shooting trajectory never reaches the crossing level
// within the time budget.
struct no_crossing_error : std::runtime_error {
  explicit no_crossing_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a trajectory trips the divergence guard.
struct blow_up_error : std::runtime_error {
  explicit blow_up_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when (s, mu) gives h^2 <= 0, i.e. no real lattice spacing exists.
struct no_real_lattice_error : std::runtime_error {
  explicit no_real_lattice_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a simulated kink front comes too close to a clamped boundary.
struct boundary_contact_error : std::runtime_error {
  explicit boundary_contact_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kinklab
