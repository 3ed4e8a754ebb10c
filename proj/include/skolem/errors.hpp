#pragma once

#include <stdexcept>
#include <string>

namespace skolem {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SKOLEM_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                          \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

SKOLEM_DEFINE_ERROR(ContextMismatch);
SKOLEM_DEFINE_ERROR(ZeroDenominator);
SKOLEM_DEFINE_ERROR(DenominatorNotUnit);
SKOLEM_DEFINE_ERROR(NotAUnit);
SKOLEM_DEFINE_ERROR(AlgebraMismatch);
SKOLEM_DEFINE_ERROR(DomainMismatch);
SKOLEM_DEFINE_ERROR(InvalidSubstitution);
SKOLEM_DEFINE_ERROR(NotPrincipalUnit);
SKOLEM_DEFINE_ERROR(ArgumentNotInQR);
SKOLEM_DEFINE_ERROR(InsufficientPrecision);
SKOLEM_DEFINE_ERROR(ZeroSeries);
SKOLEM_DEFINE_ERROR(NotLinearModP);
SKOLEM_DEFINE_ERROR(NotGeneralOfOrderOne);
SKOLEM_DEFINE_ERROR(ExponentSearchExceeded);
SKOLEM_DEFINE_ERROR(ResidueOutOfRange);
SKOLEM_DEFINE_ERROR(BNotDivisibleBy5);
SKOLEM_DEFINE_ERROR(BZero);
SKOLEM_DEFINE_ERROR(CoefficientMismatch);
SKOLEM_DEFINE_ERROR(StrassmannBoundNotTwo);
SKOLEM_DEFINE_ERROR(EvidenceFailure);
SKOLEM_DEFINE_ERROR(NotInX);

#undef SKOLEM_DEFINE_ERROR

}  // namespace skolem
