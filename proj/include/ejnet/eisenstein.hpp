#pragma once

// Exact arithmetic in the Eisenstein-Jacobi integers Z[rho], rho^2 = rho - 1,
// and residue reduction modulo a generator alpha = a + b*rho.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ejnet {

/// x + y*rho with exact 64-bit coefficients. Every operation traps overflow.
struct EJInt {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const EJInt&, const EJInt&) = default;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class InvalidGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LabelParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Normalizes a three-coordinate address x + y*rho + z*rho^2 to x' + y'*rho.
EJInt from_hex_coords(std::int64_t x, std::int64_t y, std::int64_t z);

EJInt add(EJInt p, EJInt q);
EJInt sub(EJInt p, EJInt q);
EJInt neg(EJInt p);
EJInt mul(EJInt p, EJInt q);
/// Complex conjugate: (x + y) - y*rho. p * conj(p) = norm(p).
EJInt conj(EJInt p);
std::int64_t norm(EJInt p);

inline EJInt operator+(EJInt p, EJInt q) { return add(p, q); }
inline EJInt operator-(EJInt p, EJInt q) { return sub(p, q); }
inline EJInt operator-(EJInt p) { return neg(p); }
inline EJInt operator*(EJInt p, EJInt q) { return mul(p, q); }

inline constexpr EJInt kOne{1, 0};
inline constexpr EJInt kRho{0, 1};
inline constexpr EJInt kRhoSquared{-1, 1};

/// The canonical total order on residue representatives: norm, then x, then y.
bool canonical_less(EJInt p, EJInt q);

/// Generator alpha = a + b*rho with 0 <= a <= b, (a, b) != (0, 0).
class Generator {
 public:
  /// Throws InvalidGenerator when the coefficients violate 0 <= a <= b or are both zero.
  Generator(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  EJInt value() const { return {a_, b_}; }
  /// a^2 + ab + b^2, the number of residue classes.
  std::int64_t norm() const;
  /// floor((a + 2b) / 3).
  std::int64_t diameter() const;

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// True iff alpha divides p - q in Z[rho].
bool congruent(EJInt p, EJInt q, const Generator& g);

/// Canonical representative of p's residue class: the minimum under
/// canonical_less among all members of the class.
EJInt reduce(EJInt p, const Generator& g);

/// Hop weight of a single representative: min over z of |x+z| + |y-z| + |z|,
/// i.e. the cheapest way to write p as x' + y'*rho + z'*rho^2.
///
/// The published distance formula prints the weight as "|x| + |y| + |x|";
/// the third term is |z|.
std::int64_t hex_weight(EJInt p);

/// ASCII label "x+y*r" with both coefficients always present, e.g. "2+3*r", "-1+0*r".
std::string format_label(EJInt p);
/// Compact label omitting zero terms and unit coefficients, e.g. "r", "0", "1-r", "2*r".
std::string format_compact(EJInt p);
/// Parses a sum of terms c, c*r, c*r^2 (the "*" is optional, "ρ" is accepted for r,
/// whitespace is ignored). Throws LabelParseError on malformed input.
EJInt parse_label(std::string_view text);

}  // namespace ejnet

template <>
struct std::hash<ejnet::EJInt> {
  std::size_t operator()(const ejnet::EJInt& p) const noexcept {
    const auto ux = static_cast<std::uint64_t>(p.x);
    const auto uy = static_cast<std::uint64_t>(p.y);
    return static_cast<std::size_t>(ux * 0x9E3779B97F4A7C15ULL ^ (uy + 0x7F4A7C159E3779B9ULL + (ux << 6) + (ux >> 2)));
  }
};
