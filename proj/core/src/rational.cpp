#include "okounkov/rational.hpp"

#include <algorithm>

#include "okounkov/errors.hpp"

namespace okounkov {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
  }
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) {
    throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
  }
  Rat q(negative ? Int(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& raw) {
  Rat q = raw;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

RatVec zeros(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit_vector(std::size_t n, std::size_t i) {
  RatVec v = zeros(n);
  v[i] = 1;
  return v;
}

RatMat identity(std::size_t n) {
  RatMat m(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  RatMat bt = transpose(b);
  RatMat r(a.size(), RatVec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
  return r;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

RatVec primitive(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Int g = 0;
  for (const auto& x : v) {
    Int n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return v;
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = Rat(v[i].get_num() * (l / v[i].get_den()) / g);
  }
  return r;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

Rat determinant(RatMat m) {
  std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RatMat nullspace(RatMat m, std::size_t cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v = zeros(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(RatMat a, RatVec b) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("solve: matrix not square");
    a[i].push_back(b[i]);
  }
  auto pivots = rref(a);
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace okounkov
