#pragma once

#include <stdexcept>
#include <string>

namespace tgr {

/// Base class for everything the caller supplied wrongly: malformed
/// documents, inconsistent instances, impossible command-line requests.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// The document could not be understood at all: bad JSON, missing or
/// unknown fields, wrong element types.
class ParseError : public InputError {
public:
    explicit ParseError(const std::string& what) : InputError(what) {}
};

/// The document was well-formed but describes an invalid object: a bound
/// below the static distance, a non-strongly-connected graph, and so on.
class ValidationError : public InputError {
public:
    explicit ValidationError(const std::string& what) : InputError(what) {}
};

/// The request is outside the region an operation is defined on, e.g.
/// asking for a gadget family at a period it does not exist for.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tgr
