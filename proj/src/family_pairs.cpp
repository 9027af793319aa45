#include "hcfam/family_pairs.hpp"

#include <cmath>
#include <stdexcept>

namespace hcfam {

namespace {

FamilyPoly fp_const(int v) { return FamilyPoly::constant(Sqrt2Gaussian(v)); }
FamilyPoly fp_E() { return FamilyPoly::variable(); }

std::array<FamilyPoly, 3> triple(FamilyPoly a, FamilyPoly b, FamilyPoly c) {
  return {std::move(a), std::move(b), std::move(c)};
}

void antisymmetrize(StructureTable& t) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      for (int c = 0; c < 3; ++c) t[i][j][c] = -t[j][i][c];
}

const char* real_name(int i) { return i == 0 ? "L" : i == 1 ? "Ax" : "Ay"; }
const char* ladder_name(int i) { return i == 0 ? "J" : i == 1 ? "A+" : "A-"; }
const char* basis_name(FamilyBasis b, int i) {
  return b == FamilyBasis::Real ? real_name(i) : ladder_name(i);
}

std::string coords_to_string(const std::array<FamilyPoly, 3>& c, FamilyBasis b) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (c[i].is_zero()) continue;
    std::string cs = c[i].to_string("E");
    std::string term;
    if (cs == "1") {
      term = basis_name(b, i);
    } else if (cs == "-1") {
      term = std::string("-") + basis_name(b, i);
    } else {
      if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
      term = cs + "*" + basis_name(b, i);
    }
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

StructureTable FamilyAlgebra::default_real_table() {
  StructureTable t{};
  // [L, Ax] = Ay, [L, Ay] = -Ax, [Ax, Ay] = -E L
  t[0][1] = triple(FamilyPoly::zero(), FamilyPoly::zero(), fp_const(1));
  t[0][2] = triple(FamilyPoly::zero(), -fp_const(1), FamilyPoly::zero());
  t[1][2] = triple(-fp_E(), FamilyPoly::zero(), FamilyPoly::zero());
  antisymmetrize(t);
  return t;
}

StructureTable FamilyAlgebra::default_ladder_table() {
  StructureTable t{};
  // [J, A+] = A+, [J, A-] = -A-, [A+, A-] = E J
  t[0][1] = triple(FamilyPoly::zero(), fp_const(1), FamilyPoly::zero());
  t[0][2] = triple(FamilyPoly::zero(), FamilyPoly::zero(), -fp_const(1));
  t[1][2] = triple(fp_E(), FamilyPoly::zero(), FamilyPoly::zero());
  antisymmetrize(t);
  return t;
}

FamilyAlgebra::FamilyAlgebra()
    : real_(default_real_table()), ladder_(default_ladder_table()) {}

FamilyAlgebra::FamilyAlgebra(StructureTable real_table, StructureTable ladder_table)
    : real_(std::move(real_table)), ladder_(std::move(ladder_table)) {}

FamilyLieElement FamilyAlgebra::basis_element(FamilyBasis basis, int idx) {
  FamilyLieElement e;
  e.basis = basis;
  e.coord[static_cast<size_t>(idx)] = fp_const(1);
  return e;
}

FamilyLieElement FamilyAlgebra::zero(FamilyBasis basis) {
  FamilyLieElement e;
  e.basis = basis;
  return e;
}

FamilyLieElement FamilyAlgebra::bracket(const FamilyLieElement& a,
                                        const FamilyLieElement& b) const {
  if (a.basis != b.basis)
    throw std::invalid_argument("bracket: operands in different basis views");
  const StructureTable& t = a.basis == FamilyBasis::Real ? real_ : ladder_;
  FamilyLieElement r = zero(a.basis);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (a.coord[i].is_zero() || b.coord[j].is_zero()) continue;
      FamilyPoly factor = a.coord[i] * b.coord[j];
      for (int c = 0; c < 3; ++c) r.coord[c] += factor * t[i][j][c];
    }
  return r;
}

FamilyLieElement FamilyAlgebra::reflection(const FamilyLieElement& e) {
  FamilyLieElement r = e;
  if (e.basis == FamilyBasis::Real) {
    r.coord[0] = -e.coord[0];
    r.coord[1] = -e.coord[2];
    r.coord[2] = -e.coord[1];
  } else {
    FamilyPoly i_poly = FamilyPoly::constant(Sqrt2Gaussian::i());
    r.coord[0] = -e.coord[0];
    r.coord[1] = i_poly * e.coord[2];
    r.coord[2] = -(i_poly * e.coord[1]);
  }
  return r;
}

std::optional<int> FamilyAlgebra::weight(const FamilyLieElement& e) {
  FamilyLieElement lad = e.basis == FamilyBasis::Ladder ? e : to_ladder(e);
  static constexpr int kWeights[3] = {0, 1, -1};
  std::optional<int> w;
  for (int i = 0; i < 3; ++i) {
    if (lad.coord[i].is_zero()) continue;
    if (w && *w != kWeights[i]) return std::nullopt;
    w = kWeights[i];
  }
  return w;
}

FamilyLieElement FamilyAlgebra::to_ladder(const FamilyLieElement& e) {
  if (e.basis == FamilyBasis::Ladder) return e;
  FamilyPoly i_poly = FamilyPoly::constant(Sqrt2Gaussian::i());
  FamilyPoly inv_s2 = FamilyPoly::constant(Sqrt2Gaussian::inv_sqrt2());
  FamilyLieElement r = zero(FamilyBasis::Ladder);
  // J = iL, A+- = (Ax +- i Ay)/sqrt2  =>  j = -i l, a+- = (ax -+ i ay)/sqrt2
  r.coord[0] = -(i_poly * e.coord[0]);
  r.coord[1] = inv_s2 * (e.coord[1] - i_poly * e.coord[2]);
  r.coord[2] = inv_s2 * (e.coord[1] + i_poly * e.coord[2]);
  return r;
}

FamilyLieElement FamilyAlgebra::to_real(const FamilyLieElement& e) {
  if (e.basis == FamilyBasis::Real) return e;
  FamilyPoly i_poly = FamilyPoly::constant(Sqrt2Gaussian::i());
  FamilyPoly inv_s2 = FamilyPoly::constant(Sqrt2Gaussian::inv_sqrt2());
  FamilyLieElement r = zero(FamilyBasis::Real);
  r.coord[0] = i_poly * e.coord[0];
  r.coord[1] = inv_s2 * (e.coord[1] + e.coord[2]);
  r.coord[2] = i_poly * (inv_s2 * (e.coord[1] - e.coord[2]));
  return r;
}

CheckReport FamilyAlgebra::jacobi_report() const {
  CheckReport report;
  for (FamilyBasis basis : {FamilyBasis::Real, FamilyBasis::Ladder}) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          FamilyLieElement a = basis_element(basis, i);
          FamilyLieElement b = basis_element(basis, j);
          FamilyLieElement c = basis_element(basis, k);
          FamilyLieElement sum = zero(basis);
          FamilyLieElement t1 = bracket(a, bracket(b, c));
          FamilyLieElement t2 = bracket(b, bracket(c, a));
          FamilyLieElement t3 = bracket(c, bracket(a, b));
          for (int n = 0; n < 3; ++n)
            sum.coord[n] = t1.coord[n] + t2.coord[n] + t3.coord[n];
          std::string name = std::string("jacobi(") + basis_name(basis, i) + "," +
                             basis_name(basis, j) + "," + basis_name(basis, k) + ")";
          report.add(name, sum.is_zero(),
                     sum.is_zero() ? "" : coords_to_string(sum.coord, basis));
        }
  }
  return report;
}

CheckReport FamilyAlgebra::reflection_automorphism_report() const {
  CheckReport report;
  for (FamilyBasis basis : {FamilyBasis::Real, FamilyBasis::Ladder}) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        FamilyLieElement a = basis_element(basis, i);
        FamilyLieElement b = basis_element(basis, j);
        FamilyLieElement lhs = reflection(bracket(a, b));
        FamilyLieElement rhs = bracket(reflection(a), reflection(b));
        bool ok = lhs == rhs;
        std::string name = std::string("s.[") + basis_name(basis, i) + "," +
                           basis_name(basis, j) + "] = [s.,s.]";
        report.add(name, ok,
                   ok ? ""
                      : coords_to_string(lhs.coord, basis) + " vs " +
                            coords_to_string(rhs.coord, basis));
      }
  }
  return report;
}

CheckReport FamilyAlgebra::basis_roundtrip_report() {
  CheckReport report;
  for (int i = 0; i < 3; ++i) {
    FamilyLieElement e = basis_element(FamilyBasis::Real, i);
    e.coord[i] = FamilyPoly{Sqrt2Gaussian(Rational(2, 3)), Sqrt2Gaussian(1)};  // 2/3 + E
    bool ok = to_real(to_ladder(e)) == e;
    report.add(std::string("roundtrip real->ladder->real on ") + real_name(i), ok);
    FamilyLieElement f = basis_element(FamilyBasis::Ladder, i);
    bool ok2 = to_ladder(to_real(f)) == f;
    report.add(std::string("roundtrip ladder->real->ladder on ") + ladder_name(i), ok2);
  }
  return report;
}

// --- matrix family -------------------------------------------------------

MatPoly mat_zero() {
  MatPoly m;
  for (auto& row : m)
    for (auto& e : row) e = PolyQ::zero();
  return m;
}

MatPoly mat_basis(int i) {
  MatPoly m = mat_zero();
  PolyQ x = PolyQ::variable();
  switch (i) {
    case 1:
      m[1][2] = PolyQ::one();
      m[2][1] = -x;
      break;
    case 2:
      m[0][2] = PolyQ::one();
      m[2][0] = -x;
      break;
    case 3:
      m[0][1] = PolyQ::one();
      m[1][0] = -PolyQ::one();
      break;
    default:
      throw std::invalid_argument("mat_basis: index must be 1, 2 or 3");
  }
  return m;
}

static MatPoly mat_mul(const MatPoly& a, const MatPoly& b) {
  MatPoly r = mat_zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

MatPoly mat_commutator(const MatPoly& a, const MatPoly& b) {
  MatPoly ab = mat_mul(a, b), ba = mat_mul(b, a);
  MatPoly r = mat_zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = ab[i][j] - ba[i][j];
  return r;
}

bool mat_equal(const MatPoly& a, const MatPoly& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

std::optional<std::array<PolyQ, 3>> decompose_in_matrix_basis(const MatPoly& m) {
  std::array<PolyQ, 3> c = {m[1][2], m[0][2], m[0][1]};  // alpha, beta, gamma
  MatPoly rebuilt = mat_zero();
  for (int i = 0; i < 3; ++i) {
    MatPoly ji = mat_basis(i + 1);
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) rebuilt[r][s] += c[i] * ji[r][s];
  }
  if (!mat_equal(rebuilt, m)) return std::nullopt;
  return c;
}

namespace {

// The transport comparison needs the family constants inside Q[E]; a
// tampered table can leave the field, which counts as a mismatch.
std::optional<PolyQ> to_rational_poly(const FamilyPoly& p) {
  std::vector<Rational> out;
  for (int d = 0; d <= p.degree(); ++d) {
    Sqrt2Gaussian c = p.coeff(d);
    if (!c.in_gaussian_field() || !c.rational_part().is_real()) return std::nullopt;
    out.push_back(c.rational_part().re());
  }
  return PolyQ(std::move(out));
}

PolyQ substitute_minus_x(const PolyQ& p) {
  std::vector<Rational> out;
  for (int d = 0; d <= p.degree(); ++d)
    out.push_back(d % 2 == 0 ? p.coeff(d) : -p.coeff(d));
  return PolyQ(std::move(out));
}

Mat3Q eval_mat(const MatPoly& m, const Rational& x) {
  Mat3Q r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[i][j].eval(x);
  return r;
}

Mat3Q rational_commutator(const Mat3Q& a, const Mat3Q& b) {
  Mat3Q r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational acc(0);
      for (int k = 0; k < 3; ++k)
        acc += a[i][k] * b[k][j] - b[i][k] * a[k][j];
      r[i][j] = acc;
    }
  return r;
}

}  // namespace

CheckReport iso_transport_report(const FamilyAlgebra& alg,
                                 const std::vector<Rational>& e_samples) {
  if (e_samples.empty())
    throw std::invalid_argument("iso_transport_report: empty sample set");
  CheckReport report;

  MatPoly j1 = mat_basis(1), j2 = mat_basis(2), j3 = mat_basis(3);
  PolyQ x = PolyQ::variable();

  // Matrix bracket table as polynomial identities.
  {
    MatPoly lhs = mat_commutator(j1, j2);
    MatPoly want = mat_zero();
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) want[r][s] = x * j3[r][s];
    report.add("[j1,j2]=x*j3", mat_equal(lhs, want));
    report.add("[j2,j3]=j1", mat_equal(mat_commutator(j2, j3), j1));
    report.add("[j3,j1]=j2", mat_equal(mat_commutator(j3, j1), j2));
    report.add("[j3,j3]=0", mat_equal(mat_commutator(j3, j3), mat_zero()));
  }

  // Transport of the family structure constants: Ax -> j1, Ay -> j2, L -> j3,
  // E -> -x. Family coordinate order is (L, Ax, Ay); matrix index of slot c
  // is mat_of[c].
  const int mat_of[3] = {3, 1, 2};
  const char* fam_names[3] = {"L", "Ax", "Ay"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FamilyLieElement br = alg.bracket(
          FamilyAlgebra::basis_element(FamilyBasis::Real, i),
          FamilyAlgebra::basis_element(FamilyBasis::Real, j));
      std::string name = std::string("[") + fam_names[i] + "," + fam_names[j] +
                         "] transports to [j" + std::to_string(mat_of[i]) +
                         ",j" + std::to_string(mat_of[j]) + "]";
      auto mat_side = decompose_in_matrix_basis(
          mat_commutator(mat_basis(mat_of[i]), mat_basis(mat_of[j])));
      if (!mat_side) {
        report.add(name, false, "matrix commutator left the span");
        continue;
      }
      bool ok = true;
      std::string detail;
      for (int c = 0; c < 3; ++c) {
        auto fam_poly = to_rational_poly(br.coord[c]);
        if (!fam_poly) {
          ok = false;
          detail = "family constant outside Q[E]";
          break;
        }
        PolyQ transported = substitute_minus_x(*fam_poly);
        const PolyQ& matc = (*mat_side)[static_cast<size_t>(mat_of[c] - 1)];
        if (transported != matc) {
          ok = false;
          detail = "coef of " + std::string(fam_names[c]) + ": " +
                   transported.to_string("x") + " vs " + matc.to_string("x");
          break;
        }
      }
      report.add(name, ok, detail);
    }

  // Fiber re-check at the sample energies.
  for (const Rational& e : e_samples) {
    Rational xe = -e;
    Mat3Q m1 = eval_mat(j1, xe), m2 = eval_mat(j2, xe), m3 = eval_mat(j3, xe);
    Mat3Q lhs = rational_commutator(m1, m2);
    Mat3Q want{};
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) want[r][s] = xe * m3[r][s];
    bool ok = lhs == want;
    report.add("fiber bracket at E=" + e.to_string(), ok);
  }
  return report;
}

bool fiber_membership(const Mat3Q& m, const Rational& x, MembershipKind kind) {
  auto d_entry = [&x](int i) { return i == 2 ? Rational(1) : x; };
  if (kind == MembershipKind::Algebra) {
    // (Z^T D_x + D_x Z)_{ij} = Z_{ji} d_j + d_i Z_{ij}
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational v = m[j][i] * d_entry(j) + d_entry(i) * m[i][j];
        if (!v.is_zero()) return false;
      }
    return true;
  }
  if (!x.is_zero()) {
    // A^T D_x A = D_x and det A = 1
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational acc(0);
        for (int k = 0; k < 3; ++k) acc += m[k][i] * d_entry(k) * m[k][j];
        Rational want = i == j ? d_entry(i) : Rational(0);
        if (acc != want) return false;
      }
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det == Rational(1);
  }
  // x = 0: block shape [B v; 0 det B] with B in O(2)
  if (!m[2][0].is_zero() || !m[2][1].is_zero()) return false;
  Rational det2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (m[2][2] != det2) return false;
  return m[0][0] * m[0][0] + m[1][0] * m[1][0] == Rational(1) &&
         m[0][1] * m[0][1] + m[1][1] * m[1][1] == Rational(1) &&
         (m[0][0] * m[0][1] + m[1][0] * m[1][1]).is_zero();
}

RealFormLabel classify_real_form(const Rational& x) {
  if (x.sign() > 0) return RealFormLabel::CompactSO3;
  if (x.sign() < 0) return RealFormLabel::SplitSO21;
  return RealFormLabel::EuclideanO2R2;
}

std::string to_string(RealFormLabel label) {
  switch (label) {
    case RealFormLabel::CompactSO3: return "SO(3)";
    case RealFormLabel::SplitSO21: return "SO(2,1)";
    case RealFormLabel::EuclideanO2R2: return "O(2)xR^2";
  }
  return "?";
}

QuadricSample quadric_sample(const Rational& x, const Rational& level,
                             const QuadricGrid& grid) {
  if (level.is_zero())
    throw std::invalid_argument("quadric_sample: level must be nonzero");
  if (grid.n_angle <= 0 || grid.n_axial <= 0)
    throw std::invalid_argument("quadric_sample: empty grid");

  QuadricSample out;
  const double xv = x.to_double();
  const double lv = level.to_double();
  const double kPi = 3.14159265358979323846;
  const int steps = grid.n_axial > 1 ? grid.n_axial - 1 : 1;

  auto push_ring = [&](double rho, double w) {
    for (int a = 0; a < grid.n_angle; ++a) {
      double th = 2.0 * kPi * a / grid.n_angle;
      out.points.push_back({rho * std::cos(th), rho * std::sin(th), w});
    }
  };

  if (x.sign() > 0) {
    if (level.sign() < 0) {
      out.geometry = "empty";
      return out;
    }
    out.geometry = "ellipsoid";
    for (int i = 0; i < grid.n_axial; ++i) {
      double phi = kPi * i / steps;
      push_ring(std::sqrt(lv / xv) * std::sin(phi), std::sqrt(lv) * std::cos(phi));
    }
  } else if (x.sign() == 0) {
    if (level.sign() < 0) {
      out.geometry = "empty";
      return out;
    }
    out.geometry = "two parallel planes";
    for (int i = 0; i < grid.n_axial; ++i) {
      double rho = grid.axial_extent * i / steps;
      push_ring(rho, std::sqrt(lv));
      push_ring(rho, -std::sqrt(lv));
    }
  } else {
    double ax = -xv;
    if (level.sign() > 0) {
      out.geometry = "two-sheeted hyperboloid";
      for (int i = 0; i < grid.n_axial; ++i) {
        double t = grid.axial_extent * i / steps;
        double rho = std::sqrt(lv / ax) * std::sinh(t);
        double w = std::sqrt(lv) * std::cosh(t);
        push_ring(rho, w);
        push_ring(rho, -w);
      }
    } else {
      out.geometry = "one-sheeted hyperboloid";
      for (int i = 0; i < grid.n_axial; ++i) {
        double t = -grid.axial_extent + 2.0 * grid.axial_extent * i / steps;
        double rho = std::sqrt(-lv / ax) * std::cosh(t);
        double w = std::sqrt(-lv) * std::sinh(t);
        push_ring(rho, w);
      }
    }
  }
  return out;
}

}  // namespace hcfam
