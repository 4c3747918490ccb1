#ifndef FFDYN_PRINT_HPP
#define FFDYN_PRINT_HPP

#include <string>

#include "ffdyn/bipoly.hpp"
#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

// Printers emit the CLI expression grammar, so print -> parse round-trips.

std::string poly_to_string(const PolyQ& p, const std::string& var);
std::string ratfunc_to_string(const RatFunc& f, const std::string& var = "t");
std::string bipoly_to_string(const BiPoly& p, const std::string& outer_var,
                             const std::string& inner_var);

} // namespace ffdyn

#endif
