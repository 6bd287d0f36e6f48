#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linf {

// An exact computation was asked for an instance beyond its configured cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), byte_offset(offset) {}
    std::size_t byte_offset;
};

}  // namespace linf
