#pragma once

#include <stdexcept>
#include <string>

namespace wha {

/// Error taxonomy surfaced by the library and the CLI. Verification
/// failures are not errors (they are reported as values); Error is for
/// malformed inputs and contract violations.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    FieldError,         // bad prime, zero denominator, field mismatch
    SyntaxError,        // spec file lexing/parsing
    SchemaError,        // unknown key, dim mismatch, missing key
    DimMismatch,        // incompatible shapes in library calls
    MalformedGroupoid,  // groupoid invariant violation
    BadSupport,         // grading supported on a non-loop morphism
    VariantMismatch,    // mixed Yetter-Drinfeld variants
    NotWellDefined,     // structure map fails to kill the kernel ideal
    IllDefined,         // module action fails to kill Ker p
    UnknownSuite,
    BadParams,
    Internal,
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline const char* kind_name(Error::Kind k) {
  switch (k) {
    case Error::Kind::FieldError: return "FieldError";
    case Error::Kind::SyntaxError: return "SyntaxError";
    case Error::Kind::SchemaError: return "SchemaError";
    case Error::Kind::DimMismatch: return "DimMismatch";
    case Error::Kind::MalformedGroupoid: return "MalformedGroupoid";
    case Error::Kind::BadSupport: return "BadSupport";
    case Error::Kind::VariantMismatch: return "VariantMismatch";
    case Error::Kind::NotWellDefined: return "NotWellDefined";
    case Error::Kind::IllDefined: return "IllDefined";
    case Error::Kind::UnknownSuite: return "UnknownSuite";
    case Error::Kind::BadParams: return "BadParams";
    case Error::Kind::Internal: return "Internal";
  }
  return "Error";
}

}  // namespace wha
