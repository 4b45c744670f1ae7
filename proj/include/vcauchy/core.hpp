#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace vcauchy {

using BigInt = boost::multiprecision::cpp_int;

/// Largest weight any enumeration will accept. Desk-scale sweeps stay far below it.
inline constexpr int kMaxEnumerationWeight = 64;

/// A truncation or enumeration bound was violated.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Two polynomials (or states) over different variable sets were combined.
class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace vcauchy
