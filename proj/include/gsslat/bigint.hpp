#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gsslat {

// All determinants, indices and polynomial values are exact integers.
using Int = boost::multiprecision::cpp_int;

}  // namespace gsslat
