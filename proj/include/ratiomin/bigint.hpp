#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ratiomin {

/// Arbitrary-precision signed integer backing the exact arithmetic path.
/// Sums and cross-multiplications never overflow by construction.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace ratiomin
