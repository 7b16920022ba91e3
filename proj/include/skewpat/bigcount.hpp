#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewpat {

// Exact unbounded nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& c) { return c.str(); }

}  // namespace skewpat
