#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crystal {

// Error raised by the text parsers; `position` is the byte offset into the
// input at which parsing failed.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Raised by the inverse map when the given monomial does not factor as an
// image of any LS path.
class not_in_image : public std::domain_error {
public:
    explicit not_in_image(const std::string& message) : std::domain_error(message) {}
};

}  // namespace crystal
