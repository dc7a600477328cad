#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace segsyz {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

}  // namespace segsyz
