#pragma once

#include <stdexcept>
#include <string>

namespace cubefun {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BadExponent : Error { using Error::Error; };
struct BadParam : Error { using Error::Error; };
struct BadM : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct InconsistentProfile : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct NotBounded : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };

// LP solver outcomes
struct Infeasible : Error { using Error::Error; };
struct Unbounded : Error { using Error::Error; };
struct IterationLimit : Error { using Error::Error; };
struct CertificationFailed : Error { using Error::Error; };

}  // namespace cubefun
