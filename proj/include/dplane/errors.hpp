#pragma once

#include <stdexcept>
#include <string>

namespace dplane {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DPLANE_ERROR(Name)                                   \
    class Name : public Error {                              \
    public:                                                  \
        explicit Name(const std::string& what) : Error(what) {} \
    };

DPLANE_ERROR(ZeroDivisor)
DPLANE_ERROR(OnCone)
DPLANE_ERROR(DomainError)
DPLANE_ERROR(Overflow)
DPLANE_ERROR(SingularSample)
DPLANE_ERROR(SeedOnCone)
DPLANE_ERROR(SeedSingular)
DPLANE_ERROR(DegenerateElement)
DPLANE_ERROR(NotUnimodular)
DPLANE_ERROR(ComponentNotZero)
DPLANE_ERROR(SuperluminalFrame)
DPLANE_ERROR(NonCausalSegment)
DPLANE_ERROR(CFLViolation)
DPLANE_ERROR(ZeroInput)
DPLANE_ERROR(ConfigError)

#undef DPLANE_ERROR

}  // namespace dplane
