#pragma once

#include <stdexcept>
#include <string>

namespace rhkit {

// Base class for every condition this library reports by throwing.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The problem as posed is malformed or outside an operation's domain.
// The command-line driver maps these to exit code 1.
struct InputError : Error {
  using Error::Error;
};

// The data may be fine but the discretization cannot certify an answer
// (ambiguous numerical rank, divergent series, under-resolved phases).
// The command-line driver maps these to exit code 2.
struct NumericalError : Error {
  using Error::Error;
};

struct DegenerateParametrization : InputError { using InputError::InputError; };
struct NonzeroDegree : InputError { using InputError::InputError; };
struct ZeroValue : InputError { using InputError::InputError; };
struct BasepointOutside : InputError { using InputError::InputError; };
struct DegenerateConstraint : InputError { using InputError::InputError; };
struct NotSL2 : InputError { using InputError::InputError; };
struct OutsideAnnulus : InputError { using InputError::InputError; };
struct InterfaceMismatch : InputError { using InputError::InputError; };

struct AmbiguousWinding : NumericalError { using NumericalError::NumericalError; };
struct PhaseJumpTooLarge : NumericalError { using NumericalError::NumericalError; };
struct RankAmbiguous : NumericalError { using NumericalError::NumericalError; };
struct SumMismatch : NumericalError { using NumericalError::NumericalError; };
struct SeriesNotConverged : NumericalError { using NumericalError::NumericalError; };

}  // namespace rhkit
