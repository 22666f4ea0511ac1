#pragma once

#include <stdexcept>
#include <string>

namespace relkin {

// Base for all precondition violations raised by the library. The CLI maps
// any Error to exit code 2 and prints what(), so messages name the violated
// precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RELKIN_DEFINE_ERROR(Name)                              \
    class Name : public Error {                                \
    public:                                                    \
        Name() : Error(#Name) {}                               \
        explicit Name(const std::string& detail)               \
            : Error(std::string(#Name) + ": " + detail) {}     \
    }

RELKIN_DEFINE_ERROR(ZeroVelocity);
RELKIN_DEFINE_ERROR(DegenerateDenominator);
RELKIN_DEFINE_ERROR(SuperluminalBoost);
RELKIN_DEFINE_ERROR(ZeroTime);
RELKIN_DEFINE_ERROR(ZeroCoordinate);
RELKIN_DEFINE_ERROR(PerpendicularAxis);
RELKIN_DEFINE_ERROR(SuperluminalInput);
RELKIN_DEFINE_ERROR(SpacelikeInput);
RELKIN_DEFINE_ERROR(DegenerateRotatedVelocity);
RELKIN_DEFINE_ERROR(IrrationalRoot);
RELKIN_DEFINE_ERROR(InvalidParameters);
RELKIN_DEFINE_ERROR(UnknownFamily);

#undef RELKIN_DEFINE_ERROR

}  // namespace relkin
