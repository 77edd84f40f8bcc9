#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loclin {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vertex id or set member is not below the graph order.
class out_of_range_error : public error {
public:
    using error::error;
};

/// Input that is well-formed at the type level but not a simple graph
/// (self-loops, duplicate edges, asymmetric adjacency).
class malformed_input_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An exponential routine was asked to run beyond its supported order.
class size_limit_error : public error {
public:
    using error::error;
};

class precondition_error : public error {
public:
    using error::error;
};

class construction_error : public error {
public:
    construction_error(std::size_t step, std::string property)
        : error("construction failed at step " + std::to_string(step) + ": " + property),
          step_(step), property_(std::move(property)) {}

    std::size_t step() const noexcept { return step_; }
    const std::string& property() const noexcept { return property_; }

private:
    std::size_t step_;
    std::string property_;
};

}  // namespace loclin
