#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cobweb/connection.hpp"

namespace cobweb::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `zeros | lucas | geometric:<q> | constant:<v> | list:<a>,<b>,...`, `length` terms.
RootSequence parse_roots(const std::string& descriptor, int length);

/// Comma-separated exact rationals ("3", "-1/2").
std::vector<Rational> parse_rational_list(const std::string& text);

} // namespace cobweb::cli
