#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace youngtab {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace youngtab
