#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cobcat {

using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline bool fits_int64(const Integer& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(const Integer& v) { return v.get_si(); }

}  // namespace cobcat
