#include "okounkov/radval.hpp"

#include <cmath>

#include "okounkov/errors.hpp"

namespace okounkov {

namespace {

int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

// Splits n = s^2 * f with f square-free; returns {s, f}.
std::pair<Int, Int> square_free_split(Int n) {
  Int s = 1, f = 1;
  for (Int p = 2; p * p <= n; ++p) {
    Int pp = p * p;
    while (n % pp == 0) {
      n /= pp;
      s *= p;
    }
    if (n % p == 0) {
      n /= p;
      f *= p;
    }
  }
  f *= n;
  return {s, f};
}

// sign of x + y*sqrt(m)
int two_term_sign(const Rat& x, const Rat& y, const Int& m) {
  int sx = sgn(x);
  int sy = (m == 0) ? 0 : sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  Rat lhs = x * x;
  Rat rhs = y * y * Rat(m);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

}  // namespace

RadVal::RadVal() : coeff_(0), radicand_(1) {}

RadVal::RadVal(Rat coeff, Int radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw InvalidInput("negative radicand");
  if (radicand_ == 0 || coeff_ == 0) {
    coeff_ = 0;
    radicand_ = 1;
    return;
  }
  auto [s, f] = square_free_split(radicand_);
  coeff_ *= s;
  radicand_ = f;
}

RadVal::RadVal(const Rat& value) : coeff_(value), radicand_(1) {}

RadVal RadVal::sqrt_of(const Rat& q) {
  if (q < 0) throw InvalidInput("square root of a negative rational");
  // sqrt(p/q) = sqrt(p*q)/q
  return RadVal(Rat(1, q.get_den()), q.get_num() * q.get_den());
}

Rat RadVal::square() const {
  Rat sq = coeff_ * coeff_ * Rat(radicand_);
  return coeff_ < 0 ? Rat(-sq) : sq;
}

double RadVal::to_double() const { return coeff_.get_d() * std::sqrt(radicand_.get_d()); }

std::string RadVal::to_string() const {
  if (radicand_ == 1) return okounkov::to_string(coeff_);
  if (coeff_ == 1) return "sqrt(" + radicand_.get_str() + ")";
  return okounkov::to_string(coeff_) + "*sqrt(" + radicand_.get_str() + ")";
}

RadVal RadVal::operator*(const RadVal& o) const {
  return RadVal(coeff_ * o.coeff_, radicand_ * o.radicand_);
}

RadVal RadVal::operator*(const Rat& c) const { return RadVal(coeff_ * c, radicand_); }

bool operator==(const RadVal& a, const RadVal& b) {
  return a.coeff() == b.coeff() && a.radicand() == b.radicand();
}
bool operator!=(const RadVal& a, const RadVal& b) { return !(a == b); }

bool operator<(const RadVal& a, const RadVal& b) {
  return surd_sign(Rat(0), a.coeff(), a.radicand(), -b.coeff(), b.radicand()) < 0;
}
bool operator<=(const RadVal& a, const RadVal& b) { return !(b < a); }

int surd_sign(const Rat& a, const Rat& b, const Int& k, const Rat& c, const Int& l) {
  int sv = 0;
  {
    Rat bb = (k == 0) ? Rat(0) : b;
    Rat cc = (l == 0) ? Rat(0) : c;
    int s1 = sgn(bb), s2 = sgn(cc);
    if (s1 == 0) {
      sv = s2;
    } else if (s2 == 0 || s1 == s2) {
      sv = s1;
    } else {
      Rat m1 = bb * bb * Rat(k), m2 = cc * cc * Rat(l);
      sv = (m1 == m2) ? 0 : (m1 > m2 ? s1 : s2);
    }
  }
  int sa = sgn(a);
  if (sa == 0) return sv;
  if (sv == 0 || sv == sa) return sa;
  // |a| versus |b sqrt k + c sqrt l|: a^2 - (b^2 k + c^2 l) - 2bc sqrt(kl)
  Rat x = a * a - b * b * Rat(k) - c * c * Rat(l);
  Rat y = -2 * b * c;
  int cmp = two_term_sign(x, y, k * l);
  if (cmp == 0) return 0;
  return cmp > 0 ? sa : sv;
}

Rat QuadVal::as_rational() const {
  if (!is_rational()) throw DegreeOverflow("value " + to_string() + " is irrational");
  return shift + rad.coeff();
}

RadVal QuadVal::as_radval() const {
  if (shift == 0) return rad;
  if (is_rational()) return RadVal(shift + rad.coeff());
  throw DegreeOverflow("value " + to_string() + " is not a pure surd");
}

double QuadVal::to_double() const { return shift.get_d() + rad.to_double(); }

std::string QuadVal::to_string() const {
  if (rad.coeff() == 0) return okounkov::to_string(shift);
  if (shift == 0) return rad.to_string();
  if (rad.is_rational()) return okounkov::to_string(shift + rad.coeff());
  std::string r = rad.to_string();
  if (r[0] == '-') return okounkov::to_string(shift) + " - " + r.substr(1);
  return okounkov::to_string(shift) + " + " + r;
}

int compare(const QuadVal& x, const QuadVal& y) {
  return surd_sign(x.shift - y.shift, x.rad.coeff(), x.rad.radicand(), -y.rad.coeff(), y.rad.radicand());
}

int compare(const QuadVal& x, const RadVal& y) { return compare(x, QuadVal(y)); }

int compare(const QuadVal& x, const Rat& y) { return compare(x, QuadVal(y)); }

}  // namespace okounkov
