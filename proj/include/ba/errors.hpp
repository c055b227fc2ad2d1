#pragma once

#include <stdexcept>
#include <string>

namespace ba {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define BA_DEFINE_ERROR(Name, default_message)                              \
    class Name : public Error {                                            \
    public:                                                                 \
        Name() : Error(default_message) {}                                  \
        explicit Name(const std::string& what) : Error(what) {}             \
    }

BA_DEFINE_ERROR(DivisionByZero, "division by zero");
BA_DEFINE_ERROR(MixedFields, "operands belong to different fields");
BA_DEFINE_ERROR(InvalidModulus, "modulus is not a prime below 2^61");
BA_DEFINE_ERROR(IndexOutOfRange, "index out of range");
BA_DEFINE_ERROR(DimensionMismatch, "dimension mismatch");
BA_DEFINE_ERROR(SingularMatrix, "matrix is singular");
BA_DEFINE_ERROR(NotUpperTriangular, "matrix is not upper triangular");
BA_DEFINE_ERROR(NotVeryGood, "matrix is not very good");
BA_DEFINE_ERROR(NotInTriangle, "location does not lie in the triangle");
BA_DEFINE_ERROR(NotAdjacent, "locations are not adjacent");
BA_DEFINE_ERROR(NotABasis, "vectors do not form a basis");
BA_DEFINE_ERROR(NotTotallyOpposite, "flags are not totally opposite");
BA_DEFINE_ERROR(DiameterTooSmall, "diameter is too small for this operation");
BA_DEFINE_ERROR(ZeroValue, "value function must be nonzero everywhere");
BA_DEFINE_ERROR(ZeroQ, "q must be nonzero");
BA_DEFINE_ERROR(ParseError, "malformed document");
BA_DEFINE_ERROR(InternalError, "internal consistency failure");

#undef BA_DEFINE_ERROR

}  // namespace ba
