#ifndef LIEEXP_RATIONAL_HPP
#define LIEEXP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lieexp {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& r) { return r.str(); }

} // namespace lieexp

#endif
