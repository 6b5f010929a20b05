#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kleinian {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
    virtual const char *kind() const noexcept = 0;
};

#define KLEINIAN_ERROR(Name)                                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string &what) : Error(what) {}                \
        const char *kind() const noexcept override { return #Name; }           \
    }

KLEINIAN_ERROR(DivisionByZero);
KLEINIAN_ERROR(FieldMismatch);
KLEINIAN_ERROR(ParamMismatch);
KLEINIAN_ERROR(InvalidParameter);
KLEINIAN_ERROR(NotDivisible);
KLEINIAN_ERROR(NotDivisibleByT);
KLEINIAN_ERROR(InvalidGenerator);
KLEINIAN_ERROR(NonNilpotent);
KLEINIAN_ERROR(ShapeMismatch);
KLEINIAN_ERROR(NotApplicable);
KLEINIAN_ERROR(ZeroScalar);
KLEINIAN_ERROR(FamilyMismatch);
KLEINIAN_ERROR(InconsistentSystem);
KLEINIAN_ERROR(UnknownVariable);
KLEINIAN_ERROR(UsageError);
KLEINIAN_ERROR(NonAssociative);

#undef KLEINIAN_ERROR

class SyntaxError : public Error {
public:
    SyntaxError(const std::string &what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    const char *kind() const noexcept override { return "SyntaxError"; }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace kleinian
