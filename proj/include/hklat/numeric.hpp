#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hklat/errors.hpp"

namespace hklat {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// Quotient rounded toward -infinity (cpp_int's operator/ truncates toward 0).
Int floor_div(const Int& a, const Int& b);

Int factorial(int n);

// n = squarefree * root^2 with squarefree squarefree.
struct SquareSplit {
  Int squarefree;
  Int root;
};

// Trial-division factorization; requires 0 < n < 2^64 and reports anything
// larger as out of range rather than returning a wrong answer.
SquareSplit split_square(const Int& n);
Int squarefree_part(const Int& n);

// Canonical "p/q" form, lowest terms, q >= 1 (so "0/1", "3/1", "-2/5").
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace hklat
