#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qca {

using Int = mpz_class;
using Rat = mpq_class;

// Every failure inside the library is reported through this type; `code` is a
// short machine-readable tag used by the CLI and the HTTP service.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

long long to_ll(const Int& x);
int to_int(const Int& x);
std::string to_string(const Int& x);
Int parse_int(std::string_view text);

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace qca
