#pragma once

#include <stdexcept>
#include <string>

namespace autlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table / construction validation.
struct NotLatinSquare : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };
struct NoIdentity : Error { using Error::Error; };
struct NoInverse : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct InvalidAction : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotCentral : Error { using Error::Error; };
struct ParentMismatch : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };

// Resource limits. Exceeding a cap is always an error, never truncation.
struct OrderCapExceeded : Error { using Error::Error; };
struct LatticeBlowup : Error { using Error::Error; };

// Serialization.
struct IoError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

}  // namespace autlab
