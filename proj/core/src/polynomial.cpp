// Copyright 2026 The latsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latsec/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "latsec/error.hpp"

namespace latsec {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs)
    : RationalPolynomial(std::vector<Rational>(coeffs)) {}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int power) {
  if (power < 0) throw DomainError("negative monomial power");
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1, Rational(0));
  coeffs.back() = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational RationalPolynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::pow(unsigned exponent) const {
  RationalPolynomial result = constant(1);
  RationalPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  RationalPolynomial out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RationalPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

PolynomialDivision divide(const RationalPolynomial& dividend, const RationalPolynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs();
  const int db = divisor.degree();
  const Rational lc = divisor.leading();
  if (dividend.degree() < db) return {RationalPolynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - db) + 1, Rational(0));
  for (int k = dividend.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * divisor.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.degree() < 1) return p;
  const RationalPolynomial g = gcd(p, p.derivative());
  return divide(p, g).quotient;
}

Rational resultant(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  Rational scale = 1;
  while (true) {
    const int dx = x.degree();
    const int dy = y.degree();
    if (dy == 0) {
      Rational r = 1;
      for (int i = 0; i < dx; ++i) r *= y.leading();
      return scale * r;
    }
    if (dx == 0) {
      Rational r = 1;
      for (int i = 0; i < dy; ++i) r *= x.leading();
      return scale * r;
    }
    if (dx < dy) {
      if ((dx * dy) % 2 != 0) scale = -scale;
      std::swap(x, y);
      continue;
    }
    RationalPolynomial r = divide(x, y).remainder;
    if (r.is_zero()) return 0;
    const int dr = r.degree();
    if ((dx * dy) % 2 != 0) scale = -scale;
    for (int i = 0; i < dx - dr; ++i) scale *= y.leading();
    x = std::move(y);
    y = std::move(r);
  }
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmSequence::SturmSequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (true) {
    RationalPolynomial r = divide(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_of(q(x)));
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign_of(q.leading()));
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign_of(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
  return count_changes(signs);
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
  // V(a) - V(b) counts roots in (a, b]; drop b itself if it is a root.
  const int at_b = chain_.front()(b) == 0 ? 1 : 0;
  return sign_changes(a) - sign_changes(b) - at_b;
}

int SturmSequence::count_real_roots() const {
  return sign_changes_at_neg_infinity() - sign_changes_at_pos_infinity();
}

Rational root_bound(const RationalPolynomial& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k)) / lc));
  return m + 1;
}

namespace {

struct Isolator {
  const SturmSequence& sturm;
  const Rational& max_width;
  std::vector<RationalInterval>& out;

  void refine(Rational a, Rational b) {
    const auto& q = sturm.base();
    while (b - a > max_width) {
      Rational mid = (a + b) / 2;
      if (q(mid) == 0) {
        out.push_back({mid, mid});
        return;
      }
      if (sturm.count_open(a, mid) == 1) {
        b = std::move(mid);
      } else {
        a = std::move(mid);
      }
    }
    out.push_back({std::move(a), std::move(b)});
  }

  void split(const Rational& a, const Rational& b, int roots) {
    if (roots == 0) return;
    if (roots == 1) {
      refine(a, b);
      return;
    }
    const Rational mid = (a + b) / 2;
    const bool mid_is_root = sturm.base()(mid) == 0;
    const int left = sturm.count_open(a, mid);
    const int right = roots - left - (mid_is_root ? 1 : 0);
    split(a, mid, left);
    if (mid_is_root) out.push_back({mid, mid});
    split(mid, b, right);
  }
};

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const RationalPolynomial& p, const Rational& lo,
                                                 const Rational& hi, const Rational& max_width) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  if (!(lo < hi)) throw DomainError("root isolation needs lo < hi");
  if (max_width <= 0) throw DomainError("root isolation width must be positive");
  std::vector<RationalInterval> out;
  if (p.degree() == 0) return out;
  const SturmSequence sturm(square_free_part(p));
  Isolator iso{sturm, max_width, out};
  iso.split(lo, hi, sturm.count_open(lo, hi));
  return out;
}

}  // namespace latsec
