#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <sstream>
#include <string>

namespace cgt {

// Exact rational arithmetic for atom adornments and scores. Never floats:
// every comparison in the library is decided exactly.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Stable content hash. Rationals are kept in lowest terms by the backend,
// so the printed form is canonical.
inline std::size_t hash_value(const Rational& r) {
  return std::hash<std::string>{}(to_string(r));
}

}  // namespace cgt
