#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qosc {

/// Software floating point with 50 decimal digits, used for golden-table
/// generation and for root polishing when double rounding is not enough.
using ext_real = boost::multiprecision::cpp_bin_float_50;

}  // namespace qosc
