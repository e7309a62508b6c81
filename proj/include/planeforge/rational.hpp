#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace planeforge {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

}  // namespace planeforge
