// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base of every domain error raised by the library.  Each named failure
/// condition gets its own type so callers can catch exactly what they expect.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HECKE_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// laurent
HECKE_DEFINE_ERROR(NotDivisible);
HECKE_DEFINE_ERROR(DivisionByZero);
HECKE_DEFINE_ERROR(ZeroBase);
HECKE_DEFINE_ERROR(ExponentOverflow);
HECKE_DEFINE_ERROR(ParseError);

// diagrams
HECKE_DEFINE_ERROR(InvalidPartition);
HECKE_DEFINE_ERROR(UnsupportedOrder);
HECKE_DEFINE_ERROR(NoSuchDiagram);
HECKE_DEFINE_ERROR(TooLarge);

// murphy
HECKE_DEFINE_ERROR(IndexOutOfRange);
HECKE_DEFINE_ERROR(ConsecutiveIndices);

// characters
HECKE_DEFINE_ERROR(UnreducibleWord);
HECKE_DEFINE_ERROR(SizeMismatch);
HECKE_DEFINE_ERROR(DegenerateEigenvalues);

// oracle
HECKE_DEFINE_ERROR(ConstructionFailed);
HECKE_DEFINE_ERROR(ResidualDenominator);

// casimir
HECKE_DEFINE_ERROR(TooManyRows);
HECKE_DEFINE_ERROR(MalformedSpectrum);

#undef HECKE_DEFINE_ERROR

} // namespace hecke
