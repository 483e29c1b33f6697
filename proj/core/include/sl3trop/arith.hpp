#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sl3t {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec to_int_vec(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> to_i64_vec(const IntVec& v);

// "p/q", or "p" when the denominator is 1
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

bool is_integer(const Rat& r);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& k, const IntVec& a);

}  // namespace sl3t
