#include "hklat/numeric.hpp"

namespace hklat {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw PreconditionError("floor_div by zero");
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int factorial(int n) {
  if (n < 0) throw PreconditionError("factorial of a negative integer");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

SquareSplit split_square(const Int& n) {
  if (n <= 0) throw PreconditionError("split_square requires a positive integer");
  if (n >= Int(1) << 64)
    throw PreconditionError(
        "split_square: operand does not fit 64 bits; trial division would not "
        "terminate in reasonable time");
  std::uint64_t v = n.convert_to<std::uint64_t>();
  Int squarefree = 1, root = 1;
  for (std::uint64_t p = 2; p <= v / p; p += (p == 2 ? 1 : 2)) {
    if (v % p != 0) continue;
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) squarefree *= p;
  }
  if (v > 1) squarefree *= v;  // leftover prime
  return {squarefree, root};
}

Int squarefree_part(const Int& n) { return split_square(n).squarefree; }

std::string rat_to_string(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw PreconditionError("malformed rational: '" + s + "'");
  }
}

}  // namespace hklat
