#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

namespace qpart {

// The fixed variable universe. Declaration order is the significance order
// used by the monomial ordering: q > x > a > b > t.
enum class Var : std::uint8_t { q = 0, x = 1, a = 2, b = 3, t = 4 };

inline constexpr std::array<Var, 5> kAllVars{Var::q, Var::x, Var::a, Var::b, Var::t};
inline constexpr std::array<Var, 4> kAuxVars{Var::x, Var::a, Var::b, Var::t};

std::string_view var_name(Var v);

// Power product q^e0 x^e1 a^e2 b^e3 t^e4 with non-negative exponents.
//
// Stored packed in one 64-bit word laid out as
//   [total degree:14][q:10][x:10][a:10][b:10][t:10]
// so that comparing the packed words is exactly graded lexicographic order
// (total degree first, then q, x, a, b, t). Exponents are capped at 1023.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 1023;

  constexpr Monomial() = default;
  Monomial(std::initializer_list<std::pair<Var, unsigned>> powers);

  static Monomial of(Var v, unsigned e = 1);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((packed_ >> shift(v)) & kFieldMask);
  }
  unsigned degree() const { return static_cast<unsigned>(packed_ >> kDegreeShift); }
  bool is_one() const { return packed_ == 0; }

  Monomial with(Var v, unsigned e) const;
  // Same monomial with the q exponent cleared.
  Monomial aux() const { return with(Var::q, 0); }
  Monomial pow(unsigned e) const;

  std::uint64_t key() const { return packed_; }

  friend Monomial operator*(Monomial lhs, Monomial rhs);
  friend constexpr auto operator<=>(Monomial, Monomial) = default;
  friend constexpr bool operator==(Monomial, Monomial) = default;

  // "1", "q", "q^2*x*a^3", ...
  std::string to_string() const;

 private:
  static constexpr unsigned kFieldBits = 10;
  static constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;
  static constexpr unsigned kDegreeShift = 5 * kFieldBits;

  static constexpr unsigned shift(Var v) {
    return (4 - static_cast<unsigned>(v)) * kFieldBits;
  }

  std::uint64_t packed_ = 0;
};

// Shorthands used by the builders: q^e, x^e, ...
inline Monomial q_pow(unsigned e) { return Monomial::of(Var::q, e); }
inline Monomial x_pow(unsigned e) { return Monomial::of(Var::x, e); }

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    std::uint64_t k = m.key();
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

}  // namespace qpart
