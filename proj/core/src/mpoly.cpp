#include "dhermite/mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace dhermite {

namespace {

constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

constexpr std::array<std::string_view, kVarCount> kVarNames = {"z1", "z2", "xi", "t", "eta"};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[index_of(v)]; }

RationalMPoly::RationalMPoly(const BigRational& constant) { accumulate(Exponents{}, constant); }

RationalMPoly::RationalMPoly(long constant) : RationalMPoly(BigRational(constant)) {}

RationalMPoly RationalMPoly::variable(Var v, std::uint32_t power) {
  Exponents e{};
  e[index_of(v)] = power;
  return monomial(BigRational(1), e);
}

RationalMPoly RationalMPoly::monomial(const BigRational& coeff, const Exponents& exps) {
  RationalMPoly p;
  p.accumulate(exps, coeff);
  return p;
}

void RationalMPoly::accumulate(const Exponents& exps, const BigRational& coeff) {
  if (sgn(coeff) == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) {
      terms_.erase(it);
    }
  }
}

std::uint32_t RationalMPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, e[index_of(v)]);
  }
  return d;
}

BigRational RationalMPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigRational(0) : it->second;
}

double RationalMPoly::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) {
    m = std::max(m, std::abs(c.get_d()));
  }
  return m;
}

RationalMPoly& RationalMPoly::operator+=(const RationalMPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    accumulate(e, c);
  }
  return *this;
}

RationalMPoly& RationalMPoly::operator-=(const RationalMPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    accumulate(e, -c);
  }
  return *this;
}

RationalMPoly operator*(const RationalMPoly& lhs, const RationalMPoly& rhs) {
  RationalMPoly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        e[i] = ea[i] + eb[i];
      }
      out.accumulate(e, ca * cb);
    }
  }
  return out;
}

RationalMPoly& RationalMPoly::operator*=(const RationalMPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

RationalMPoly& RationalMPoly::operator*=(const BigRational& rhs) {
  if (sgn(rhs) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    c *= rhs;
  }
  return *this;
}

RationalMPoly RationalMPoly::operator-() const {
  RationalMPoly out = *this;
  for (auto& [e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

std::string RationalMPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  // Highest-degree terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (is_constant || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << kVarNames[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

RationalMPoly poly_add(const RationalMPoly& a, const RationalMPoly& b) { return a + b; }
RationalMPoly poly_mul(const RationalMPoly& a, const RationalMPoly& b) { return a * b; }
RationalMPoly poly_scale(const RationalMPoly& p, const BigRational& c) { return p * c; }

RationalMPoly poly_pow(const RationalMPoly& p, unsigned n) {
  RationalMPoly result(1);
  RationalMPoly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

RationalMPoly poly_diff(const RationalMPoly& p, Var v, unsigned order) {
  if (v == Var::xi) {
    throw std::invalid_argument("poly_diff: xi is a parameter symbol and cannot be differentiated");
  }
  const std::size_t k = index_of(v);
  RationalMPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] < order) continue;
    BigRational factor(1);
    for (unsigned i = 0; i < order; ++i) {
      factor *= e[k] - i;
    }
    Exponents ne = e;
    ne[k] -= order;
    out += RationalMPoly::monomial(c * factor, ne);
  }
  return out;
}

RationalMPoly poly_antiderivative(const RationalMPoly& p, Var v) {
  const std::size_t k = index_of(v);
  RationalMPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne[k] += 1;
    BigRational coeff = c / BigRational(ne[k]);
    out += RationalMPoly::monomial(coeff, ne);
  }
  return out;
}

RationalMPoly poly_substitute(const RationalMPoly& p, Var v, const RationalMPoly& value) {
  const std::size_t k = index_of(v);
  // Powers of the replacement are shared across terms.
  std::vector<RationalMPoly> powers{RationalMPoly(1)};
  RationalMPoly out;
  for (const auto& [e, c] : p.terms()) {
    while (powers.size() <= e[k]) {
      powers.push_back(powers.back() * value);
    }
    Exponents rest = e;
    rest[k] = 0;
    out += RationalMPoly::monomial(c, rest) * powers[e[k]];
  }
  return out;
}

RationalMPoly poly_integrate_def(const RationalMPoly& p, Var v, const RationalMPoly& lower,
                                 const RationalMPoly& upper) {
  if (lower.degree(v) > 0 || upper.degree(v) > 0) {
    throw std::invalid_argument("poly_integrate_def: bounds depend on the integration variable");
  }
  const RationalMPoly anti = poly_antiderivative(p, v);
  return poly_substitute(anti, v, upper) - poly_substitute(anti, v, lower);
}

RationalMPoly poly_divide_monomial(const RationalMPoly& p, const Exponents& divisor) {
  RationalMPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] < divisor[i]) {
        throw std::domain_error("poly_divide_monomial: term " +
                                RationalMPoly::monomial(c, e).to_string() + " is not divisible");
      }
      ne[i] = e[i] - divisor[i];
    }
    out += RationalMPoly::monomial(c, ne);
  }
  return out;
}

std::complex<double> poly_eval(const RationalMPoly& p, const EvalPoint& point) {
  std::array<std::vector<std::complex<double>>, kVarCount> powers;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const auto v = static_cast<Var>(i);
    const std::uint32_t d = p.degree(v);
    if (d == 0) continue;
    const auto& value = point.get(v);
    if (!value) {
      throw std::invalid_argument("poly_eval: no value for variable " + std::string(var_name(v)));
    }
    auto& pw = powers[i];
    pw.resize(d + 1);
    pw[0] = 1.0;
    for (std::uint32_t j = 1; j <= d; ++j) {
      pw[j] = pw[j - 1] * *value;
    }
  }
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

std::string poly_to_json(const RationalMPoly& p) {
  if (p.degree(Var::eta) > 0) {
    throw std::logic_error("poly_to_json: integration variable still present");
  }
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"e", {e[0], e[1], e[2], e[3]}},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

}  // namespace dhermite
