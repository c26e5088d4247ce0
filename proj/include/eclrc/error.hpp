#ifndef ECLRC_ERROR_HPP
#define ECLRC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace eclrc {

enum class ErrorKind {
    InvalidArgument,
    NotPrime,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    SingularCurve,
    PointNotOnCurve,
    StructureContradiction,
    NoMaximalCurveFound,
    PrecisionCapExceeded,
    ZeroFunction,
    NonRationalSupport,
    FieldTooLargeForScan,
    NotASubgroup,
    NoSuchFunction,
    InvarianceFailure,
    DependenceDetected,
    NotEnoughFibers,
    ParameterViolation,
    MinorSingular,
    TooManyErasuresInGroup,
    NotErased,
    Undecodable,
    SearchSpaceTooLarge,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every domain failure in the library is reported through this type; the
/// kind is what the CLI serializes into its JSON error object.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace eclrc

#endif
