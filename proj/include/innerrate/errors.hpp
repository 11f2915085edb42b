#pragma once

#include <stdexcept>

namespace innerrate {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User-input errors (CLI maps these to exit code 1).
struct ParseError : Error { using Error::Error; };
struct NotPrimary : Error { using Error::Error; };

// Contract violations.
struct DimensionMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct UnknownEdge : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NonIntegralMultiplicity : Error { using Error::Error; };
struct BoundaryRay : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct DisconnectedPoint : Error { using Error::Error; };
struct AllJacobiansZero : Error { using Error::Error; };

// Signals an engine bug, never bad input.
struct InconsistentInvariants : Error { using Error::Error; };

}  // namespace innerrate
