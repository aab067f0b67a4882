#include "branecalc/poly2.hpp"

namespace branecalc {

void Poly2::add_term(int deg1, int deg2, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(deg1, deg2);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly2 Poly2::constant(Rational c) { return monomial(std::move(c), 0, 0); }
Poly2 Poly2::t1() { return monomial(Rational(1), 1, 0); }
Poly2 Poly2::t2() { return monomial(Rational(1), 0, 1); }

Poly2 Poly2::monomial(Rational c, int deg1, int deg2) {
  Poly2 out;
  out.add_term(deg1, deg2, c);
  return out;
}

Poly2 Poly2::operator+(const Poly2& rhs) const {
  Poly2 out = *this;
  for (const auto& [key, c] : rhs.terms_) out.add_term(key.first, key.second, c);
  return out;
}

Poly2 Poly2::operator-(const Poly2& rhs) const {
  Poly2 out = *this;
  for (const auto& [key, c] : rhs.terms_)
    out.add_term(key.first, key.second, -c);
  return out;
}

Poly2 Poly2::operator*(const Poly2& rhs) const {
  Poly2 out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

Poly2 Poly2::operator*(const Rational& scalar) const {
  Poly2 out;
  for (const auto& [key, c] : terms_)
    out.add_term(key.first, key.second, c * scalar);
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out;
  for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, -c);
  return out;
}

Poly2 Poly2::derivative_t1() const {
  Poly2 out;
  for (const auto& [key, c] : terms_) {
    if (key.first > 0)
      out.add_term(key.first - 1, key.second, c * Rational(key.first));
  }
  return out;
}

Poly2 Poly2::derivative_t2() const {
  Poly2 out;
  for (const auto& [key, c] : terms_) {
    if (key.second > 0)
      out.add_term(key.first, key.second - 1, c * Rational(key.second));
  }
  return out;
}

Rational Poly2::eval(const Rational& t1, const Rational& t2) const {
  Rational out;
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < key.first; ++i) term *= t1;
    for (int j = 0; j < key.second; ++j) term *= t2;
    out += term;
  }
  return out;
}

Rational Poly2::coefficient(int deg1, int deg2) const {
  auto it = terms_.find({deg1, deg2});
  return it == terms_.end() ? Rational() : it->second;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest total degree first reads like the usual convention
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    const bool negative = c.is_negative();
    Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    if (key.first > 0)
      vars += "t1" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) {
      if (!vars.empty()) vars += "*";
      vars += "t2" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    if (vars.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += vars;
    } else {
      out += mag.str() + "*" + vars;
    }
  }
  return out;
}

}  // namespace branecalc
