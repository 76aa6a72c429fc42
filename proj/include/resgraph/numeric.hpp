#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace resgraph {

/// Exact arbitrary-precision integer. All lattice computations use this
/// type; no floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

/// Canonical "num/den" rendering, denominator always present ("2/3", "-1/3",
/// "4/1"). Used for every rational that leaves the library (JSON, reports).
inline std::string fraction_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Plain "p/q" without forcing a denominator of 1 ("1/2", "3").
inline std::string short_fraction_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return fraction_string(r);
}

}  // namespace resgraph
