#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorKind {
    ZeroElement,
    DuplicatePoint,
    PointNotOnCurve,
    ZeroArgument,
    ProductNotOne,
    BadPose,
    Reducible,
    NotAPencil,
    ShortOrbit,
    Collision,
    CheckpointCorrupt,
    ResourceBudgetExceeded,
    BadNesting,
    SearchBoundExceeded,
    NotBig,
    NotNested,
    NotRank3,
    RadiusTooLarge,
    InvalidArgument,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cremona
