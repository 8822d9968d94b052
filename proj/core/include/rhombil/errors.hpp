#pragma once

#include <stdexcept>
#include <string>

namespace rhombil {

// Every failure the library reports derives from Error; the leaf types are
// what callers branch on.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RHOMBIL_ERROR(Name)                                     \
    class Name : public Error {                                 \
    public:                                                     \
        explicit Name(const std::string& what) : Error(what) {} \
    }

RHOMBIL_ERROR(ZeroDenominator);
RHOMBIL_ERROR(NegativeArgument);
RHOMBIL_ERROR(IndexOutOfRange);
RHOMBIL_ERROR(ParameterOrder);
RHOMBIL_ERROR(OddLength);
RHOMBIL_ERROR(FormulaSingular);
RHOMBIL_ERROR(ParityMismatch);
RHOMBIL_ERROR(BadParameters);
RHOMBIL_ERROR(NotSymmetric);
RHOMBIL_ERROR(AxisNotCutSet);
RHOMBIL_ERROR(Indivisible);
RHOMBIL_ERROR(TooLarge);
RHOMBIL_ERROR(MissingCell);
RHOMBIL_ERROR(ClassViolation);
RHOMBIL_ERROR(ParseError);
RHOMBIL_ERROR(AmbiguousCalibration);
RHOMBIL_ERROR(NoVariantPasses);

#undef RHOMBIL_ERROR

class ResourceLimit : public Error {
public:
    ResourceLimit(const std::string& what, int width)
        : Error(what), width_(width) {}
    int width() const noexcept { return width_; }

private:
    int width_;
};

} // namespace rhombil
