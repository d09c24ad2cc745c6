#ifndef ELLGEN_ERRORS_HPP
#define ELLGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellgen {

/** \brief Base class of every error raised by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ELLGEN_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

ELLGEN_DEFINE_ERROR(NonUnitLeadingCoefficient);
ELLGEN_DEFINE_ERROR(BadValuation);
ELLGEN_DEFINE_ERROR(VariableNotPresent);
ELLGEN_DEFINE_ERROR(NotHomogeneous);
ELLGEN_DEFINE_ERROR(DivisionByZero);
ELLGEN_DEFINE_ERROR(PrecisionError);
ELLGEN_DEFINE_ERROR(RankZeroTotal);
ELLGEN_DEFINE_ERROR(UnknownName);
ELLGEN_DEFINE_ERROR(BadParams);
ELLGEN_DEFINE_ERROR(DimensionMismatch);
ELLGEN_DEFINE_ERROR(InsufficientOrder);
ELLGEN_DEFINE_ERROR(WrongPoleOrder);
ELLGEN_DEFINE_ERROR(NotSU);
ELLGEN_DEFINE_ERROR(InconsistentSystem);
ELLGEN_DEFINE_ERROR(NonDivisible);
ELLGEN_DEFINE_ERROR(DegenerateSample);
ELLGEN_DEFINE_ERROR(ParseError);

#undef ELLGEN_DEFINE_ERROR

}  // namespace ellgen

#endif
