#pragma once

#include <stdexcept>
#include <string>

namespace dualdec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error { using Error::Error; };
struct NonPrimitivePolynomial : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct InfoTooLong : Error { using Error::Error; };
struct NonBinaryCoefficient : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NoneFound : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct NotNonbinary : Error { using Error::Error; };
struct ConfigInvalid : Error { using Error::Error; };

} // namespace dualdec
