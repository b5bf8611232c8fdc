#include "vpf/rational.hpp"

#include <algorithm>
#include <cctype>

#include "vpf/errors.hpp"

namespace vpf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ClosureOverflow: return "ClosureOverflow";
    case ErrorKind::DegenerateSeed: return "DegenerateSeed";
    case ErrorKind::EmptyNbc: return "EmptyNbc";
    case ErrorKind::ZeroDenominatorFactor: return "ZeroDenominatorFactor";
    case ErrorKind::TruncationTooLow: return "TruncationTooLow";
    case ErrorKind::NonRationalCoefficient: return "NonRationalCoefficient";
    case ErrorKind::GluingMismatch: return "GluingMismatch";
    case ErrorKind::NonIntegerValue: return "NonIntegerValue";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::UnknownChamberId: return "UnknownChamberId";
    case ErrorKind::DatabaseFormat: return "DatabaseFormat";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Int parse_int(std::string_view text) {
  if (!is_decimal(text, true)) {
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  return Int(std::string(text));
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const auto den_text = text.substr(slash + 1);
  if (!is_decimal(den_text, false)) {
    throw Error(ErrorKind::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  }
  return make_rat(parse_int(text.substr(0, slash)), Int(std::string(den_text)));
}

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& r) { return r - Rat(floor(r)); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(std::span<const Int> a, std::span<const Rat> b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec primitive(IntVec v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IntVec primitive(std::span<const Rat> v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (den / x.get_den()));
  return primitive(std::move(out));
}

RatVec to_rat(std::span<const Int> v) { return RatVec(v.begin(), v.end()); }

IntVec to_int(std::span<const long long> v) {
  IntVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

int sign(const Int& z) { return sgn(z); }
int sign(const Rat& r) { return sgn(r); }

bool lex_less(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace vpf
