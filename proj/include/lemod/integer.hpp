#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace lemod {

// Exact unbounded integers for polynomial coefficients and matrix entries.
using Integer = boost::multiprecision::cpp_int;

// Bounded integers for indices, ranks, traces and Euler characteristics.
using Int = std::int64_t;

}  // namespace lemod
