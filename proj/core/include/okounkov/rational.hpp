// Exact rational scalars, vectors and dense matrices.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace okounkov {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q = 0.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" text; "p" when the denominator is 1.
std::string to_string(const Rat& q);
std::string to_string(const RatVec& v);

RatVec zeros(std::size_t n);
RatVec unit_vector(std::size_t n, std::size_t i);
RatMat identity(std::size_t n);

Rat dot(const RatVec& a, const RatVec& b);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& c, const RatVec& a);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat transpose(const RatMat& m);
RatMat mat_mul(const RatMat& a, const RatMat& b);

bool is_zero(const RatVec& v);
bool is_integral(const Rat& q);

/// Scales v by a positive factor so its entries are coprime integers.
RatVec primitive(const RatVec& v);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMat& m);
std::size_t rank(RatMat m);
Rat determinant(RatMat m);

/// Basis of {x : m x = 0}, one vector per free column.
RatMat nullspace(RatMat m, std::size_t cols);

/// Unique solution of a square nonsingular system, or nullopt.
std::optional<RatVec> solve(RatMat a, RatVec b);

/// Exact square root of a nonnegative rational, when it is a perfect square.
std::optional<Rat> exact_sqrt(const Rat& q);

/// Total order used for deterministic vertex lists.
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace okounkov
