#include "qca/int.hpp"

#include <climits>

namespace qca {

long long to_ll(const Int& x) {
  if (!x.fits_slong_p()) throw Error("overflow", "integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

int to_int(const Int& x) {
  long long v = to_ll(x);
  if (v < INT_MIN || v > INT_MAX) throw Error("overflow", "integer does not fit in int: " + x.get_str());
  return static_cast<int>(v);
}

std::string to_string(const Int& x) { return x.get_str(); }

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("invalid_input", "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error("invalid_input", "bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw Error("invalid_input", "bad integer literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("overflow", "64-bit overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("overflow", "64-bit overflow in multiplication");
  return r;
}

}  // namespace qca
