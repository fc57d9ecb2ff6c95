#include "fmq/rational.hpp"

#include <cctype>

#include "fmq/errors.hpp"

namespace fmq {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
  if (!is_integer(q)) throw InvariantViolation("expected an integer, got " + to_string(q));
  return q.get_num();
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

Int parse_int(std::string_view text) {
  std::string_view s = trim(text);
  if (!valid_integer_literal(s)) throw InputError("not an integer: '" + std::string(text) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!valid_integer_literal(num) || !valid_integer_literal(den))
    throw InputError("not a rational: '" + std::string(text) + "'");
  const Int d = parse_int(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return make_rat(parse_int(num), d);
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

bool is_integral(const RatVec& v) {
  for (const Rat& q : v)
    if (!is_integer(q)) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(to_int(q));
  return out;
}

}  // namespace fmq
