#include "ejnet/eisenstein.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace ejnet {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("EJInt addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("EJInt subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("EJInt multiplication overflow");
  return r;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

bool divisible(std::int64_t v, std::int64_t m) { return v % m == 0; }

// Nearest integer to num / den (den > 0), ties rounded up.
std::int64_t round_div(std::int64_t num, std::int64_t den) {
  return floor_div(checked_add(checked_mul(2, num), den), checked_mul(2, den));
}

std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) throw ArithmeticOverflow("EJInt magnitude overflow");
  return v < 0 ? -v : v;
}

}  // namespace

EJInt from_hex_coords(std::int64_t x, std::int64_t y, std::int64_t z) {
  return {checked_sub(x, z), checked_add(y, z)};
}

EJInt add(EJInt p, EJInt q) { return {checked_add(p.x, q.x), checked_add(p.y, q.y)}; }

EJInt sub(EJInt p, EJInt q) { return {checked_sub(p.x, q.x), checked_sub(p.y, q.y)}; }

EJInt neg(EJInt p) { return {checked_sub(0, p.x), checked_sub(0, p.y)}; }

EJInt mul(EJInt p, EJInt q) {
  const std::int64_t yy = checked_mul(p.y, q.y);
  return {checked_sub(checked_mul(p.x, q.x), yy),
          checked_add(checked_add(checked_mul(p.x, q.y), checked_mul(q.x, p.y)), yy)};
}

EJInt conj(EJInt p) { return {checked_add(p.x, p.y), checked_sub(0, p.y)}; }

std::int64_t norm(EJInt p) {
  return checked_add(checked_add(checked_mul(p.x, p.x), checked_mul(p.x, p.y)), checked_mul(p.y, p.y));
}

bool canonical_less(EJInt p, EJInt q) {
  const std::int64_t np = norm(p);
  const std::int64_t nq = norm(q);
  if (np != nq) return np < nq;
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

Generator::Generator(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (a < 0 || b < a) {
    throw InvalidGenerator("generator must satisfy 0 <= a <= b, got a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
  }
  if (a == 0 && b == 0) throw InvalidGenerator("generator must be nonzero");
}

std::int64_t Generator::norm() const { return ejnet::norm(value()); }

std::int64_t Generator::diameter() const { return (a_ + 2 * b_) / 3; }

bool congruent(EJInt p, EJInt q, const Generator& g) {
  const std::int64_t n = g.norm();
  const EJInt d = mul(sub(p, q), conj(g.value()));
  return divisible(d.x, n) && divisible(d.y, n);
}

EJInt reduce(EJInt p, const Generator& g) {
  const EJInt alpha = g.value();
  const std::int64_t n = g.norm();
  // Rounded quotient leaves a remainder alpha*e with |e.x|, |e.y| <= 1/2, so
  // norm(r) <= 3N/4 and the class minimum lies within one step of it.
  const EJInt scaled = mul(p, conj(alpha));
  const EJInt quotient{round_div(scaled.x, n), round_div(scaled.y, n)};
  const EJInt r = sub(p, mul(quotient, alpha));

  EJInt best = r;
  for (std::int64_t i = -2; i <= 2; ++i) {
    for (std::int64_t j = -2; j <= 2; ++j) {
      const EJInt candidate = sub(r, mul(EJInt{i, j}, alpha));
      if (canonical_less(candidate, best)) best = candidate;
    }
  }
  return best;
}

std::int64_t hex_weight(EJInt p) {
  // f(z) = |x + z| + |y - z| + |z| is convex and piecewise linear with
  // breakpoints -x, y and 0; its minimum sits on one of them.
  const std::array<std::int64_t, 3> breakpoints{0, checked_sub(0, p.x), p.y};
  std::int64_t best = INT64_MAX;
  for (const std::int64_t z : breakpoints) {
    const std::int64_t w =
        checked_add(checked_add(abs64(checked_add(p.x, z)), abs64(checked_sub(p.y, z))), abs64(z));
    best = std::min(best, w);
  }
  return best;
}

std::string format_label(EJInt p) {
  std::string out = std::to_string(p.x);
  out += p.y < 0 ? "-" : "+";
  out += std::to_string(p.y < 0 ? -p.y : p.y);
  out += "*r";
  return out;
}

std::string format_compact(EJInt p) {
  if (p.x == 0 && p.y == 0) return "0";
  std::string out;
  if (p.x != 0) out = std::to_string(p.x);
  if (p.y != 0) {
    const std::int64_t mag = p.y < 0 ? -p.y : p.y;
    if (p.y < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "r";
  }
  return out;
}

namespace {

std::string normalize_label_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) continue;
    // UTF-8 rho (U+03C1) and superscript two (U+00B2).
    if (c == 0xCF && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x81) {
      out += 'r';
      ++i;
    } else if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB2) {
      out += "^2";
      ++i;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

}  // namespace

EJInt parse_label(std::string_view text) {
  const std::string s = normalize_label_text(text);
  if (s.empty()) throw LabelParseError("empty node label");
  auto fail = [&](const std::string& why) -> LabelParseError {
    return LabelParseError("cannot parse node label '" + std::string(text) + "': " + why);
  };

  std::int64_t x = 0, y = 0, z = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    first = false;

    std::int64_t coeff = 1;
    bool has_digits = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = checked_add(checked_mul(coeff, 10), s[pos] - '0');
        ++pos;
      }
      has_digits = true;
    }
    if (pos < s.size() && s[pos] == '*') {
      if (!has_digits) throw fail("'*' without a coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'r') throw fail("expected 'r' after '*'");
    }
    int power = 0;
    if (pos < s.size() && s[pos] == 'r') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || s[pos] != '2') throw fail("only r^2 powers are supported");
        ++pos;
        power = 2;
      }
    } else if (!has_digits) {
      throw fail("empty term");
    }
    const std::int64_t term = checked_mul(sign, coeff);
    if (power == 0) x = checked_add(x, term);
    if (power == 1) y = checked_add(y, term);
    if (power == 2) z = checked_add(z, term);
  }
  return from_hex_coords(x, y, z);
}

}  // namespace ejnet
