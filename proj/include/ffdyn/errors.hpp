#ifndef FFDYN_ERRORS_HPP
#define FFDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffdyn {

// Bad input values: zero polynomials where nonzero is required, maps that
// are not morphisms, points with poles at the reduction place, ...
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

struct degenerate_input_error : precondition_error {
    explicit degenerate_input_error(const std::string& what) : precondition_error(what) {}
};

struct pole_at_place_error : precondition_error {
    explicit pole_at_place_error(const std::string& what) : precondition_error(what) {}
};

struct not_a_morphism_error : precondition_error {
    explicit not_a_morphism_error(const std::string& what) : precondition_error(what) {}
};

// A configured degree/size cap was exceeded.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at column " + std::to_string(pos + 1) + ")"), position(pos) {}
};

} // namespace ffdyn

#endif
