// Exact values of the form q*sqrt(k) and a + q*sqrt(k).
#pragma once

#include <string>

#include "okounkov/rational.hpp"

namespace okounkov {

/// coeff * sqrt(radicand), radicand square-free; radicand is 1 exactly when the value is rational.
class RadVal {
 public:
  RadVal();
  RadVal(Rat coeff, Int radicand);
  explicit RadVal(const Rat& value);

  /// sqrt(q) for a nonnegative rational q.
  static RadVal sqrt_of(const Rat& q);

  const Rat& coeff() const { return coeff_; }
  const Int& radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 1; }
  Rat square() const;  // signed: coeff*|coeff|*radicand keeps the sign
  double to_double() const;
  std::string to_string() const;

  RadVal operator*(const RadVal& o) const;
  RadVal operator*(const Rat& c) const;
  RadVal operator-() const { return RadVal(-coeff_, radicand_); }

 private:
  Rat coeff_;
  Int radicand_;
};

bool operator==(const RadVal& a, const RadVal& b);
bool operator!=(const RadVal& a, const RadVal& b);
bool operator<(const RadVal& a, const RadVal& b);
bool operator<=(const RadVal& a, const RadVal& b);

/// shift + rad; closed form for roots of rational quadratics.
struct QuadVal {
  Rat shift;
  RadVal rad;

  QuadVal() = default;
  QuadVal(Rat s, RadVal r) : shift(std::move(s)), rad(std::move(r)) {}
  explicit QuadVal(const Rat& q) : shift(q), rad() {}
  explicit QuadVal(const RadVal& r) : shift(0), rad(r) {}

  bool is_rational() const { return rad.coeff() == 0 || rad.is_rational(); }
  /// Value as a rational; throws DegreeOverflow when irrational.
  Rat as_rational() const;
  /// Pure surd form; throws DegreeOverflow when shift and surd are both nonzero.
  RadVal as_radval() const;
  double to_double() const;
  std::string to_string() const;
};

/// Sign of a + b*sqrt(k) + c*sqrt(l) for rationals a,b,c and nonnegative integers k,l.
int surd_sign(const Rat& a, const Rat& b, const Int& k, const Rat& c, const Int& l);

int compare(const QuadVal& x, const QuadVal& y);
int compare(const QuadVal& x, const RadVal& y);
int compare(const QuadVal& x, const Rat& y);

}  // namespace okounkov
