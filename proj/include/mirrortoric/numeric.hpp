#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrortoric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Lattice vector: a point of Z^n, stored dense.
using VecZ = std::vector<Int>;
/// Rational vector: a point of Q^n.
using VecQ = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  return Rat(num, den);  // mpz-pair constructor canonicalizes sign and gcd
}

Rat rat_pow(const Rat& base, long e);

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

bool is_integral(const Rat& r);
bool is_integral(const VecQ& v);
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

VecQ to_q(const VecZ& v);
VecZ to_z(const VecQ& v);  // throws unless integral

VecZ add(const VecZ& a, const VecZ& b);
VecZ sub(const VecZ& a, const VecZ& b);
VecZ neg(const VecZ& a);
VecQ add(const VecQ& a, const VecQ& b);
VecQ sub(const VecQ& a, const VecQ& b);
VecQ neg(const VecQ& a);
VecQ scale(const Rat& c, const VecQ& a);

Int dot(const VecZ& a, const VecZ& b);
Rat dot(const VecQ& a, const VecQ& b);
Rat dot(const VecZ& a, const VecQ& b);
inline Rat dot(const VecQ& a, const VecZ& b) { return dot(b, a); }

bool is_zero(const VecZ& v);
bool is_zero(const VecQ& v);

/// v divided by the gcd of its entries; direction preserved. Rejects v = 0.
VecZ primitive(const VecZ& v);
/// Clears denominators, then reduces to the primitive vector in the same direction.
VecZ primitive(const VecQ& v);

struct MatZ {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  MatZ() = default;
  MatZ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static MatZ identity(int n);
  static MatZ from_rows(const std::vector<VecZ>& rows);
  static MatZ from_cols(const std::vector<VecZ>& cols);
  /// Convenience for literal fixtures.
  static MatZ from_ints(const std::vector<std::vector<long>>& rows);

  VecZ row(int r) const;
  VecZ col(int c) const;
  MatZ transposed() const;
  MatZ operator*(const MatZ& rhs) const;
  bool operator==(const MatZ& rhs) const { return rows == rhs.rows && cols == rhs.cols && a == rhs.a; }

  /// A·v on column vectors. Rejects dimension mismatch.
  VecZ apply(const VecZ& v) const;
  VecQ apply(const VecQ& v) const;
};

/// Basis of the integer kernel lattice {v : A v = 0}, each vector primitive,
/// first nonzero entry positive. Empty iff A is injective.
std::vector<VecZ> kernel_basis(const MatZ& A);
std::vector<VecZ> kernel_basis(const std::vector<VecZ>& rows, int n);

int rank(const std::vector<VecQ>& rows);
int rank(const std::vector<VecZ>& rows);

enum class SolveStatus { unique, inconsistent, underdetermined };
struct SolveResult {
  SolveStatus status;
  VecQ x;  // valid when status == unique
};
/// Solves <rows[i], x> = rhs[i] exactly.
SolveResult solve_linear(const std::vector<VecQ>& rows, const VecQ& rhs);
SolveResult solve_linear(const std::vector<VecZ>& rows, const VecQ& rhs);

/// Inverse of a square rational matrix given as rows; nullopt when singular.
std::optional<std::vector<VecQ>> inverse(const std::vector<VecQ>& rows);

Int lcm_int(const Int& a, const Int& b);

std::string vec_str(const VecZ& v);
std::string vec_str(const VecQ& v);

}  // namespace mirrortoric
