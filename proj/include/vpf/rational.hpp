#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vpf {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Builds num/den in canonical form. Throws InvalidArgument for den == 0.
Rat make_rat(const Int& num, const Int& den = 1);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Parses "p", "-p" or "p/q" (q != 0). Throws InvalidArgument on anything else.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

Int floor(const Rat& r);
/// Representative of r modulo 1 in [0, 1).
Rat frac(const Rat& r);
bool is_integer(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Int dot(std::span<const Int> a, std::span<const Int> b);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);
Rat dot(std::span<const Int> a, std::span<const Rat> b);

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(IntVec v);
/// Smallest positive multiple of v with coprime integer entries.
IntVec primitive(std::span<const Rat> v);

RatVec to_rat(std::span<const Int> v);
IntVec to_int(std::span<const long long> v);

int sign(const Int& z);
int sign(const Rat& r);

/// Lexicographic comparison; shorter vectors order first.
bool lex_less(std::span<const Int> a, std::span<const Int> b);

}  // namespace vpf
