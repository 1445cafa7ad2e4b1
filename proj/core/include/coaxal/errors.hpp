#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace coaxal {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag; the CLI forwards it verbatim in error reports.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

// A precondition on an argument was violated (domain errors, bad flags,
// singular configurations).
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what)
      : Error("invalid_argument", what) {}
};

// A circle handed to parameter_of() is not a member of the pencil.
struct NotInPencil : Error {
  explicit NotInPencil(const std::string& what)
      : Error("not_in_pencil", what) {}
};

// The circle pair is internally/externally tangent: the pencil degenerates
// to a tangent (parabolic) pencil, handled by the a1_* family instead.
struct TangentPencil : Error {
  explicit TangentPencil(const std::string& what)
      : Error("tangent_pencil", what) {}
};

// Concentric circles: the group degenerates to plain rotations (k = 0).
struct ConcentricPencil : Error {
  explicit ConcentricPencil(const std::string& what)
      : Error("concentric_pencil", what) {}
};

struct IntersectingCircles : Error {
  explicit IntersectingCircles(const std::string& what)
      : Error("intersecting_circles", what) {}
};

// Two maps from different pencils cannot be composed.
struct PencilMismatch : Error {
  explicit PencilMismatch(const std::string& what)
      : Error("pencil_mismatch", what) {}
};

// The adaptive quadrature ran out of subdivision depth.
struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& what)
      : Error("quadrature_failure", what) {}
};

// Independent checks that must agree (analytic vs empirical closure) did not.
struct NumericalInconsistency : Error {
  explicit NumericalInconsistency(const std::string& what)
      : Error("numerical_inconsistency", what) {}
};

}  // namespace coaxal
