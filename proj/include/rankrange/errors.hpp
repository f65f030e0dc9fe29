#pragma once

#include <stdexcept>
#include <string>

namespace rankrange {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositeModulus : Error {
    using Error::Error;
};
struct ModulusTooLarge : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct SchurNotApplicable : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct NotSkew : Error {
    using Error::Error;
};
struct CharTwoUnsupported : Error {
    using Error::Error;
};
struct FieldTooSmall : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct DegenerateCode : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace rankrange
