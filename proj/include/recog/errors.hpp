#pragma once

#include <stdexcept>
#include <string>

namespace recog {

// Malformed input text (universe files, tree DSL).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside an operation's domain.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Input exceeds a representability guard (expansion size, word width, ...).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace recog
