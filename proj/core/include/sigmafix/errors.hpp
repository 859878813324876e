#ifndef SIGMAFIX_ERRORS_HPP
#define SIGMAFIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigmafix {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class MismatchedGroups : public Error {
public:
    using Error::Error;
};

class TrivialCharacter : public Error {
public:
    using Error::Error;
};

class MalformedDescriptor : public Error {
public:
    using Error::Error;
};

class UnsupportedPsi : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace sigmafix

#endif
