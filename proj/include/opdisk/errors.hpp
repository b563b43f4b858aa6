#pragma once

#include <stdexcept>

namespace opdisk {

/// Base class of all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- matrix kernel ---
struct NotHermitian : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };          // scalar function hit an eigenvalue outside its domain
struct SingularMatrix : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// --- pairs, block matrices, group elements ---
struct NotThetaUnitary : Error { using Error::Error; };
struct SingularG : Error { using Error::Error; };            // invertible-part parameter of a triangular element is singular
struct NotAntiHermitian : Error { using Error::Error; };
struct NotBorel : Error { using Error::Error; };             // block matrix does not factor through the triangular subgroup

// --- disk geometry ---
struct NotInDisk : Error { using Error::Error; };
struct NotBoundary : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };

// --- projective line ---
struct SingularFirstComponent : Error { using Error::Error; };
struct NotOnHyperboloid : Error { using Error::Error; };
struct NotProjection : Error { using Error::Error; };
struct NotTangent : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };

// --- cross ratio / coefficient transport ---
struct NoSolution : Error { using Error::Error; };           // interpolation systems unsolvable or ambiguous
struct BaseMismatch : Error { using Error::Error; };

// --- block algebras ---
struct BlockPatternViolation : Error { using Error::Error; };
struct NotDiagonal : Error { using Error::Error; };

// --- io / configuration / harness ---
struct ParseError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct SuiteFailure : Error { using Error::Error; };

}  // namespace opdisk
