#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace malcev {

// Thrown when an input exceeds one of the documented desk-scale caps.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed term text; position is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace malcev
