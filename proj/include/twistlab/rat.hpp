#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlab {

// The field K. Everything is exact, so mpq_class is all we need.
using Rat = mpq_class;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q" or "p"; throws InputError on junk or a zero denominator
Rat parse_rat(std::string_view s);
std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace twistlab
