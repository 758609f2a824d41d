#pragma once

#include <stdexcept>

namespace qtomo {

// Base class for every validation or domain error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QTOMO_DEFINE_ERROR(Name)          \
    class Name : public Error {           \
    public:                               \
        using Error::Error;               \
    };

QTOMO_DEFINE_ERROR(NonHermitianInput)
QTOMO_DEFINE_ERROR(NotPositive)
QTOMO_DEFINE_ERROR(BadRank)
QTOMO_DEFINE_ERROR(DimensionMismatch)
QTOMO_DEFINE_ERROR(LengthMismatch)
QTOMO_DEFINE_ERROR(IndexOutOfRange)
QTOMO_DEFINE_ERROR(QuadratureOverflow)
QTOMO_DEFINE_ERROR(AlphaTooLargeForTruncation)
QTOMO_DEFINE_ERROR(ParameterOutOfRange)
QTOMO_DEFINE_ERROR(BadOrderingParam)
QTOMO_DEFINE_ERROR(ExcessiveLeakage)
QTOMO_DEFINE_ERROR(DimensionTooLarge)
QTOMO_DEFINE_ERROR(NonFiniteObjective)
QTOMO_DEFINE_ERROR(BadLength)
QTOMO_DEFINE_ERROR(ParseError)
QTOMO_DEFINE_ERROR(UnsupportedDimension)

#undef QTOMO_DEFINE_ERROR

}  // namespace qtomo
