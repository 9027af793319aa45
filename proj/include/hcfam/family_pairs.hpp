#pragma once

// The abstract family Lie algebra over C[E] in its two bases (the real basis
// L, Ax, Ay and the ladder basis J, A+, A-), the reflection action and weight
// grading, the concrete 3x3 matrix family it is isomorphic to (under
// x = -E), real-form classification by the signature of diag(x,x,1), and
// sampling of the associated quadric level sets.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hcfam/polynomial.hpp"
#include "hcfam/rational.hpp"
#include "hcfam/report.hpp"

namespace hcfam {

// a + b*sqrt(2) with Gaussian rational a, b. The base change between the two
// Lie algebra bases involves 1/sqrt(2); this tiny quadratic extension keeps
// the round trip exact. Brackets themselves never leave Q(i).
class Sqrt2Gaussian {
 public:
  Sqrt2Gaussian() = default;
  Sqrt2Gaussian(int n) : a_(n) {}                       // NOLINT
  Sqrt2Gaussian(Rational r) : a_(std::move(r)) {}       // NOLINT
  Sqrt2Gaussian(GaussianRational a) : a_(std::move(a)) {}  // NOLINT
  Sqrt2Gaussian(GaussianRational a, GaussianRational b)
      : a_(std::move(a)), b_(std::move(b)) {}

  static Sqrt2Gaussian sqrt2() { return {GaussianRational(0), GaussianRational(1)}; }
  static Sqrt2Gaussian inv_sqrt2() {
    return {GaussianRational(0), GaussianRational(Rational(1, 2))};
  }
  static Sqrt2Gaussian i() { return {GaussianRational::i(), GaussianRational(0)}; }

  const GaussianRational& rational_part() const { return a_; }
  const GaussianRational& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_gaussian_field() const { return b_.is_zero(); }

  Sqrt2Gaussian operator-() const { return {-a_, -b_}; }
  Sqrt2Gaussian& operator+=(const Sqrt2Gaussian& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Sqrt2Gaussian& operator-=(const Sqrt2Gaussian& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Sqrt2Gaussian& operator*=(const Sqrt2Gaussian& o) {
    GaussianRational na = a_ * o.a_ + GaussianRational(2) * b_ * o.b_;
    GaussianRational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  friend Sqrt2Gaussian operator+(Sqrt2Gaussian x, const Sqrt2Gaussian& y) { return x += y; }
  friend Sqrt2Gaussian operator-(Sqrt2Gaussian x, const Sqrt2Gaussian& y) { return x -= y; }
  friend Sqrt2Gaussian operator*(Sqrt2Gaussian x, const Sqrt2Gaussian& y) { return x *= y; }
  friend bool operator==(const Sqrt2Gaussian& x, const Sqrt2Gaussian& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Sqrt2Gaussian& x, const Sqrt2Gaussian& y) { return !(x == y); }

  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string s2 = b_.to_string() + "*sqrt2";
    if (a_.is_zero()) return s2;
    return a_.to_string() + " + " + s2;
  }

 private:
  GaussianRational a_, b_;
};

using FamilyPoly = Polynomial<Sqrt2Gaussian>;

enum class FamilyBasis { Real, Ladder };  // (L, Ax, Ay) / (J, A+, A-)

struct FamilyLieElement {
  FamilyBasis basis = FamilyBasis::Real;
  std::array<FamilyPoly, 3> coord;

  bool is_zero() const {
    return coord[0].is_zero() && coord[1].is_zero() && coord[2].is_zero();
  }
  friend bool operator==(const FamilyLieElement& a, const FamilyLieElement& b) {
    return a.basis == b.basis && a.coord == b.coord;
  }
};

// table[i][j] = coordinates of [basis_i, basis_j]
using StructureTable = std::array<std::array<std::array<FamilyPoly, 3>, 3>, 3>;

class FamilyAlgebra {
 public:
  FamilyAlgebra();
  // Test hook: run the verification suites against a tampered table.
  FamilyAlgebra(StructureTable real_table, StructureTable ladder_table);

  static StructureTable default_real_table();
  static StructureTable default_ladder_table();

  static FamilyLieElement basis_element(FamilyBasis basis, int idx);
  static FamilyLieElement zero(FamilyBasis basis);

  FamilyLieElement bracket(const FamilyLieElement& a, const FamilyLieElement& b) const;

  // The reflection generator of O(2,C): s.L=-L, s.Ax=-Ay, s.Ay=-Ax; in the
  // ladder basis s.J=-J, s.A+=-i A-, s.A-=+i A+.
  static FamilyLieElement reflection(const FamilyLieElement& e);

  // Weight under the rotation grading (J: 0, A+/-: +1/-1); nullopt when the
  // element is not homogeneous.
  static std::optional<int> weight(const FamilyLieElement& e);

  static FamilyLieElement to_ladder(const FamilyLieElement& e);
  static FamilyLieElement to_real(const FamilyLieElement& e);

  const StructureTable& real_table() const { return real_; }
  const StructureTable& ladder_table() const { return ladder_; }

  CheckReport jacobi_report() const;
  CheckReport reflection_automorphism_report() const;
  static CheckReport basis_roundtrip_report();

 private:
  StructureTable real_, ladder_;
};

// --- concrete 3x3 matrix family over Q[x] -------------------------------

using MatPoly = std::array<std::array<PolyQ, 3>, 3>;
using Mat3Q = std::array<std::array<Rational, 3>, 3>;

MatPoly mat_zero();
MatPoly mat_basis(int i);  // j_1 = e23 - x e32, j_2 = e13 - x e31, j_3 = e12 - e21
MatPoly mat_commutator(const MatPoly& a, const MatPoly& b);
bool mat_equal(const MatPoly& a, const MatPoly& b);

// Write m as alpha j_1 + beta j_2 + gamma j_3 when it lies in the span.
std::optional<std::array<PolyQ, 3>> decompose_in_matrix_basis(const MatPoly& m);

// Verifies the matrix bracket table and the structure-constant transport of
// the family algebra under x = -E, Ax <-> j1, Ay <-> j2, L <-> j3 (identity
// level), then re-checks fibers at the given sample energies.
CheckReport iso_transport_report(const FamilyAlgebra& alg,
                                 const std::vector<Rational>& e_samples);

enum class MembershipKind { Group, Algebra };

bool fiber_membership(const Mat3Q& m, const Rational& x, MembershipKind kind);

enum class RealFormLabel { CompactSO3, SplitSO21, EuclideanO2R2 };

RealFormLabel classify_real_form(const Rational& x);
std::string to_string(RealFormLabel label);

// --- quadric level sets v^T diag(x,x,1) v = level -----------------------

struct QuadricGrid {
  int n_angle = 32;
  int n_axial = 16;
  double axial_extent = 2.0;  // range of the non-angular sweep parameter
};

struct QuadricSample {
  std::vector<std::array<double, 3>> points;  // (u, v, w)
  std::string geometry;
};

// Parametric sweep of the level set; empty when the level set is empty.
// level must be nonzero.
QuadricSample quadric_sample(const Rational& x, const Rational& level,
                             const QuadricGrid& grid);

}  // namespace hcfam
