#include "qpart/monomial.hpp"

#include <stdexcept>

namespace qpart {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::x: return "x";
    case Var::a: return "a";
    case Var::b: return "b";
    case Var::t: return "t";
  }
  return "?";
}

Monomial::Monomial(std::initializer_list<std::pair<Var, unsigned>> powers) {
  Monomial m;
  for (auto [v, e] : powers) m = m * Monomial::of(v, e);
  *this = m;
}

Monomial Monomial::of(Var v, unsigned e) {
  return Monomial{}.with(v, e);
}

Monomial Monomial::with(Var v, unsigned e) const {
  if (e > kMaxExponent)
    throw std::overflow_error("monomial exponent exceeds " + std::to_string(kMaxExponent));
  Monomial r = *this;
  const unsigned old = exponent(v);
  r.packed_ &= ~(kFieldMask << shift(v));
  r.packed_ |= std::uint64_t{e} << shift(v);
  const std::uint64_t deg = degree() - old + e;
  r.packed_ &= (std::uint64_t{1} << kDegreeShift) - 1;
  r.packed_ |= deg << kDegreeShift;
  return r;
}

Monomial Monomial::pow(unsigned e) const {
  Monomial r;
  for (Var v : kAllVars) r = r.with(v, exponent(v) * e);
  return r;
}

Monomial operator*(Monomial lhs, Monomial rhs) {
  Monomial r;
  std::uint64_t deg = 0;
  for (Var v : kAllVars) {
    const unsigned e = lhs.exponent(v) + rhs.exponent(v);
    if (e > Monomial::kMaxExponent)
      throw std::overflow_error("monomial exponent exceeds " +
                                std::to_string(Monomial::kMaxExponent));
    r.packed_ |= std::uint64_t{e} << Monomial::shift(v);
    deg += e;
  }
  r.packed_ |= deg << Monomial::kDegreeShift;
  return r;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (Var v : kAllVars) {
    const unsigned e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace qpart
