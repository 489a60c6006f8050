#pragma once

#include <stdexcept>
#include <string>

namespace braidops {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

struct DimMismatch : Error {
    explicit DimMismatch(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct ArityOverflow : Error {
    explicit ArityOverflow(const std::string& msg) : Error(msg) {}
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& msg) : Error(msg) {}
};

struct StarMismatch : Error {
    explicit StarMismatch(const std::string& msg) : Error(msg) {}
};

struct UndefinedComposite : Error {
    explicit UndefinedComposite(const std::string& msg) : Error(msg) {}
};

} // namespace braidops
