#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fmq {

// GMP keeps mpq_class canonical: lowest terms, positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);

/// Throws InvariantViolation when q is not an integer.
Int to_int(const Rat& q);

Int gcd(const Int& a, const Int& b);

std::string to_string(const Int& v);
std::string to_string(const Rat& q);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

/// Accepts "7", "-3", "1/2", "-5/4". Throws InputError otherwise.
Int parse_int(std::string_view text);
Rat parse_rat(std::string_view text);

RatVec to_rat(const IntVec& v);
bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v);

}  // namespace fmq
