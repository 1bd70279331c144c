#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qspectral {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace qspectral
