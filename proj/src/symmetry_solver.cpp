#include "normgeo/symmetry_solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "normgeo/connection.hpp"

namespace normgeo {

QMatrix ConstraintSystem::to_dense() const {
  QMatrix m(rows.size(), unknowns());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, value] : rows[r]) m(r, c) = value;
  return m;
}

QVector ConstraintSystem::apply(std::span<const QSqrt2> x) const {
  if (x.size() != unknowns()) throw std::invalid_argument("ConstraintSystem: vector length mismatch");
  QVector out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) out[r] = dot(rows[r], x);
  return out;
}

bool ConstraintSystem::annihilates(std::span<const QSqrt2> x) const {
  if (x.size() != unknowns()) throw std::invalid_argument("ConstraintSystem: vector length mismatch");
  return std::all_of(rows.begin(), rows.end(), [&](const SparseRow& row) { return dot(row, x).is_zero(); });
}

std::size_t statistical_space_dim(std::size_t n) { return SymTensor3::count(algebra_dim(n)); }

namespace {

// Accumulates sign * [(nabla-hat_a K)(b, c)]^e into coef, keyed by unknown slot.
void add_nabla_hat_row(const Tensor3& lc, const SymTensor3& layout, std::size_t a, std::size_t b, std::size_t c,
                       std::size_t e, int sign, std::map<std::size_t, QSqrt2>& coef) {
  const std::size_t d = layout.dim();
  const QSqrt2 s(sign);
  for (std::size_t f = 0; f < d; ++f) {
    if (const QSqrt2& v = lc(a, f, e); !v.is_zero()) coef[layout.slot(b, c, f)] += s * v;
    if (const QSqrt2& v = lc(a, b, f); !v.is_zero()) coef[layout.slot(f, c, e)] -= s * v;
    if (const QSqrt2& v = lc(a, c, f); !v.is_zero()) coef[layout.slot(b, f, e)] -= s * v;
  }
}

std::string cov_name(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::array<std::size_t, 3> sorted(std::size_t x, std::size_t y, std::size_t z) {
  std::array<std::size_t, 3> t{x, y, z};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

ConstraintSystem assemble(std::size_t n) {
  const LieAlgebra& algebra = lie_algebra(n);
  const std::size_t d = algebra.dim();
  const Tensor3& lc = algebra.levi_civita().gamma;
  SymTensor3 layout(d);

  ConstraintSystem sys;
  sys.n = n;
  sys.d = d;
  for (std::size_t s = 0; s < layout.size(); ++s) sys.unknown_order.push_back(layout.triple(s));

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
          std::map<std::size_t, QSqrt2> coef;
          add_nabla_hat_row(lc, layout, a, b, c, e, +1, coef);
          add_nabla_hat_row(lc, layout, b, a, c, e, -1, coef);
          SparseRow row;
          for (auto& [col, value] : coef)
            if (!value.is_zero()) row.emplace_back(col, std::move(value));
          sys.rows.push_back(std::move(row));
          sys.labels.push_back({a, b, c, e});
        }
  return sys;
}

std::vector<PatternEntry> expected_kernel_pattern(const LieAlgebra& algebra) {
  const std::size_t n = algebra.n();
  const QSqrt2 half_sqrt2 = QSqrt2::from_fractions(0, 1, 1, 2);
  auto mean = [&](std::size_t i) { return algebra.position(BasisIndex::mean(i)); };
  auto cov = [&](std::size_t i, std::size_t j) { return algebra.position(BasisIndex::cov(i, j)); };
  std::vector<PatternEntry> out;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string si = std::to_string(i);
    out.push_back({"K^i_{i(i,i)}", "K^" + si + "_{" + si + cov_name(i, i) + "}", sorted(mean(i), mean(i), cov(i, i)),
                   QSqrt2(1)});
    out.push_back({"K^(i,i)_{(i,i)(i,i)}", "K^" + cov_name(i, i) + "_{" + cov_name(i, i) + cov_name(i, i) + "}",
                   sorted(cov(i, i), cov(i, i), cov(i, i)), QSqrt2(2)});
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const std::string si = std::to_string(i), sj = std::to_string(j), ij = cov_name(i, j);
      out.push_back({"K^(i,i)_{(i,j)(i,j)}", "K^" + cov_name(i, i) + "_{" + ij + ij + "}",
                     sorted(cov(i, i), cov(i, j), cov(i, j)), QSqrt2(1)});
      out.push_back({"K^(j,j)_{(i,j)(i,j)}", "K^" + cov_name(j, j) + "_{" + ij + ij + "}",
                     sorted(cov(j, j), cov(i, j), cov(i, j)), QSqrt2(1)});
      out.push_back({"K^i_{j(i,j)}", "K^" + si + "_{" + sj + ij + "}", sorted(mean(i), mean(j), cov(i, j)),
                     half_sqrt2});
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        out.push_back({"K^(i,k)_{(i,j)(j,k)}", "K^" + cov_name(i, k) + "_{" + cov_name(i, j) + cov_name(j, k) + "}",
                       sorted(cov(i, j), cov(j, k), cov(i, k)), half_sqrt2});
  return out;
}

SymTensor3 pattern_tensor(const LieAlgebra& algebra, const QSqrt2& p) {
  SymTensor3 k(algebra.dim());
  for (const auto& entry : expected_kernel_pattern(algebra)) {
    auto [x, y, z] = entry.triple;
    k(x, y, z) = entry.coefficient * p;
  }
  return k;
}

std::vector<CubicTableEntry> cubic_table(const LieAlgebra& algebra) {
  const std::size_t n = algebra.n();
  auto mean = [&](std::size_t i) { return algebra.position(BasisIndex::mean(i)); };
  auto cov = [&](std::size_t i, std::size_t j) { return algebra.position(BasisIndex::cov(i, j)); };
  auto lab = [&](std::size_t p) { return algebra.index(p).label(); };
  auto entry = [&](std::size_t x, std::size_t y, std::size_t z, QSqrt2 expected) {
    return CubicTableEntry{"C(" + lab(x) + "," + lab(y) + "," + lab(z) + ")", sorted(x, y, z), std::move(expected),
                           QSqrt2()};
  };
  const QSqrt2 r2 = QSqrt2::sqrt2();
  std::vector<CubicTableEntry> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(entry(cov(i, i), mean(i), mean(i), r2));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) out.push_back(entry(cov(i, j), mean(i), mean(j), QSqrt2(1)));
  for (std::size_t i = 1; i <= n; ++i) out.push_back(entry(cov(i, i), cov(i, i), cov(i, i), QSqrt2(2) * r2));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      out.push_back(entry(cov(i, i), cov(i, j), cov(i, j), r2));
      out.push_back(entry(cov(j, j), cov(i, j), cov(i, j), r2));
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) out.push_back(entry(cov(i, j), cov(j, k), cov(i, k), QSqrt2(1)));
  return out;
}

bool TheoremCertificate::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> TheoremCertificate::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return out;
}

namespace {

enum class TripleClass { MMM, MMC, MCC, CCC };

TripleClass classify(const LieAlgebra& algebra, const std::array<std::size_t, 3>& t) {
  int means = 0;
  for (std::size_t p : t) means += algebra.index(p).is_mean() ? 1 : 0;
  switch (means) {
    case 3: return TripleClass::MMM;
    case 2: return TripleClass::MMC;
    case 1: return TripleClass::MCC;
    default: return TripleClass::CCC;
  }
}

std::string triple_label(const LieAlgebra& algebra, const std::array<std::size_t, 3>& t) {
  return "{" + algebra.index(t[0]).label() + "," + algebra.index(t[1]).label() + "," + algebra.index(t[2]).label() +
         "}";
}

void add_check(TheoremCertificate& cert, std::string name, bool passed, std::string detail = {}) {
  cert.checks.push_back({std::move(name), passed, std::move(detail)});
}

// Zero-claim for one class of unknowns: every triple of the class outside the
// expected pattern must vanish in the kernel vector.
void check_vanishing(TheoremCertificate& cert, const LieAlgebra& algebra, const SymTensor3& k,
                     const std::map<std::size_t, const PatternEntry*>& allowed, TripleClass cls, std::string name) {
  std::vector<std::string> offenders;
  for (std::size_t s = 0; s < k.size(); ++s) {
    if (classify(algebra, k.triple(s)) != cls || allowed.count(s)) continue;
    if (!k.values()[s].is_zero()) offenders.push_back(triple_label(algebra, k.triple(s)) + "=" + k.values()[s].to_string());
  }
  std::string detail;
  for (std::size_t i = 0; i < offenders.size() && i < 8; ++i) detail += (i ? "; " : "") + offenders[i];
  add_check(cert, std::move(name), offenders.empty(), detail);
}

}  // namespace

TheoremCertificate solve(std::size_t n) {
  const LieAlgebra& algebra = lie_algebra(n);
  TheoremCertificate cert;
  cert.n = n;
  cert.d = algebra.dim();
  cert.system = assemble(n);
  cert.unknowns = cert.system.unknowns();
  cert.statistical_space_dim = statistical_space_dim(n);
  cert.constraint_rows = cert.system.rows.size();

  RowEchelon echelon(cert.unknowns);
  for (const auto& row : cert.system.rows) echelon.add_row(row);
  cert.rank = echelon.rank();
  auto kernel = echelon.kernel_basis();
  cert.kernel_dim = kernel.size();

  add_check(cert, "kernel_dim == unknowns - rank", cert.kernel_dim == cert.unknowns - cert.rank);
  add_check(cert, "kernel_dim == 1", cert.kernel_dim == 1, "kernel_dim=" + std::to_string(cert.kernel_dim));

  const SymTensor3 expected = pattern_tensor(algebra, QSqrt2(1));
  add_check(cert, "Amari-Chentsov pattern satisfies every constraint", cert.system.annihilates(expected.values()));
  {
    // every column is used, so no single unit vector can be added for free
    std::vector<char> used(cert.unknowns, 0);
    for (const auto& row : cert.system.rows)
      for (const auto& entry : row) used[entry.first] = 1;
    add_check(cert, "every unit perturbation breaks a constraint",
              std::all_of(used.begin(), used.end(), [](char u) { return u != 0; }));
  }

  if (cert.kernel_dim != 1) return cert;

  const std::size_t anchor =
      SymTensor3(cert.d).slot(algebra.position(BasisIndex::mean(1)), algebra.position(BasisIndex::mean(1)),
                              algebra.position(BasisIndex::cov(1, 1)));
  const QSqrt2 anchor_value = kernel[0][anchor];
  if (anchor_value.is_zero()) {
    add_check(cert, "K^1_{1(1,1)} != 0 in the kernel generator", false);
    return cert;
  }
  const QSqrt2 scale = anchor_value.inverse();
  SymTensor3 k(cert.d);
  for (std::size_t s = 0; s < k.size(); ++s) k.values()[s] = kernel[0][s] * scale;
  cert.kernel_vector = k.values();

  const auto pattern = expected_kernel_pattern(algebra);
  std::map<std::size_t, const PatternEntry*> by_slot;
  for (const auto& e : pattern) by_slot[k.slot(e.triple[0], e.triple[1], e.triple[2])] = &e;

  for (std::size_t s = 0; s < k.size(); ++s) {
    if (k.values()[s].is_zero()) continue;
    auto it = by_slot.find(s);
    PatternEntry entry;
    if (it != by_slot.end()) {
      entry = *it->second;
    } else {
      entry.family = "unexpected";
      entry.label = triple_label(algebra, k.triple(s));
      entry.triple = k.triple(s);
    }
    entry.coefficient = k.values()[s];
    cert.nonzero_pattern.push_back(std::move(entry));
  }

  {
    std::vector<std::string> mismatches;
    for (std::size_t s = 0; s < k.size(); ++s)
      if (k.values()[s] != expected.values()[s])
        mismatches.push_back(triple_label(algebra, k.triple(s)) + ": expected " + expected.values()[s].to_string() +
                             ", got " + k.values()[s].to_string());
    std::string detail;
    for (std::size_t i = 0; i < mismatches.size() && i < 8; ++i) detail += (i ? "; " : "") + mismatches[i];
    add_check(cert, "kernel matches the Amari-Chentsov pattern exactly", mismatches.empty(), detail);
  }

  check_vanishing(cert, algebra, k, by_slot, TripleClass::MCC, "step1: K^i_{(j,k)(l,m)} = 0");
  check_vanishing(cert, algebra, k, by_slot, TripleClass::MMM, "step2: K^i_{jk} = 0");
  check_vanishing(cert, algebra, k, by_slot, TripleClass::CCC,
                  "step3: K^(i,j)_{(k,l)(m,s)} = 0 outside the four surviving families");
  check_vanishing(cert, algebra, k, by_slot, TripleClass::MMC,
                  "step4: K^i_{j(k,l)} = 0 outside K^i_{i(i,i)} and K^i_{j(i,j)}");

  auto at = [&](const BasisIndex& x, const BasisIndex& y, const BasisIndex& z) -> const QSqrt2& {
    return k(algebra.position(x), algebra.position(y), algebra.position(z));
  };
  using BI = BasisIndex;
  const QSqrt2& p = at(BI::mean(1), BI::mean(1), BI::cov(1, 1));
  const QSqrt2 half_sqrt2 = QSqrt2::from_fractions(0, 1, 1, 2);
  bool same_p = true, twice = true, pair_eq = true, mean_ratio = true, triangle = true;
  for (std::size_t i = 1; i <= n; ++i) {
    const QSqrt2& pi = at(BI::mean(i), BI::mean(i), BI::cov(i, i));
    same_p = same_p && pi == p;
    twice = twice && at(BI::cov(i, i), BI::cov(i, i), BI::cov(i, i)) == QSqrt2(2) * pi;
    for (std::size_t j = i + 1; j <= n; ++j) {
      pair_eq = pair_eq && at(BI::cov(i, i), BI::cov(i, j), BI::cov(i, j)) == pi &&
                at(BI::cov(j, j), BI::cov(i, j), BI::cov(i, j)) == pi;
      mean_ratio = mean_ratio && at(BI::mean(i), BI::mean(j), BI::cov(i, j)) == half_sqrt2 * pi;
      for (std::size_t l = j + 1; l <= n; ++l)
        triangle = triangle && at(BI::cov(i, j), BI::cov(j, l), BI::cov(i, l)) == half_sqrt2 * pi;
    }
  }
  add_check(cert, "final: K^i_{i(i,i)} = p for every i", same_p);
  add_check(cert, "final: K^(i,i)_{(i,i)(i,i)} = 2p", twice);
  add_check(cert, "final: K^(i,i)_{(i,j)(i,j)} = K^(j,j)_{(i,j)(i,j)} = p", pair_eq);
  add_check(cert, "final: K^i_{j(i,j)} = (sqrt2/2) p", mean_ratio);
  add_check(cert, "final: K^(i,k)_{(i,j)(j,k)} = (sqrt2/2) p", triangle);
  return cert;
}

TheoremCertificate verify_theorem(std::size_t n) {
  TheoremCertificate cert = solve(n);
  if (cert.kernel_vector.empty()) return cert;
  const LieAlgebra& algebra = lie_algebra(n);

  SymTensor3 generator(cert.d);
  generator.values() = cert.kernel_vector;
  const QSqrt2 p = QSqrt2::from_fractions(0, 1, -1, 2);  // -sqrt2/2
  const SymTensor3 amari = generator.scaled(p);
  const SymTensor3 cubic = amari.scaled(-2);

  cert.cubic_entries = cubic_table(algebra);
  bool table_ok = true;
  for (auto& e : cert.cubic_entries) {
    e.computed = cubic(e.triple[0], e.triple[1], e.triple[2]);
    table_ok = table_ok && e.computed == e.expected;
  }
  add_check(cert, "cubic table reproduced at p = -sqrt2/2", table_ok);
  add_check(cert, "C = -2K at p = -sqrt2/2 equals the cubic form of the representatives", cubic == algebra.cubic());

  const QSqrt2 alphas[] = {QSqrt2(0),
                           QSqrt2(1),
                           QSqrt2(-1),
                           QSqrt2(2),
                           QSqrt2(-2),
                           QSqrt2::from_fractions(1, 2),
                           QSqrt2::from_fractions(-1, 2),
                           QSqrt2::from_fractions(1, 3)};
  for (const QSqrt2& alpha : alphas) {
    const SymTensor3 k = amari.scaled(alpha);
    const ConnCoeffs conn = from_difference(algebra, k);
    const CurvatureTensor r = curvature(algebra, conn);
    const std::string tag = "alpha=" + alpha.rational_part().get_str();
    add_check(cert, "conjugate symmetric, " + tag, r == curvature(algebra, conjugate(conn)));
    add_check(cert, "R(alpha) = R(-alpha), " + tag, r == curvature(algebra, from_difference(algebra, k.scaled(-1))));
    add_check(cert, "predicates (2)-(5) all hold, " + tag, predicate_suite(algebra, k).all());
  }
  add_check(cert, "curvature of alpha=+1 connection vanishes",
            curvature(algebra, from_difference(algebra, amari)).is_zero());
  add_check(cert, "curvature of alpha=-1 connection vanishes",
            curvature(algebra, from_difference(algebra, amari.scaled(-1))).is_zero());
  return cert;
}

}  // namespace normgeo
