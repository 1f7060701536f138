#pragma once

// Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras via
// structure constants over Scalar, plus elements, tensor elements and the
// definitional law checkers. Basis indices are the canonical identity; names
// are display metadata.

#include <hopfkit/matrix.hpp>
#include <hopfkit/report.hpp>

#include <string>
#include <vector>

namespace hopfkit {

struct CarrierMismatch : std::runtime_error {
  CarrierMismatch() : std::runtime_error("elements live over different carriers") {}
};

struct FinDimAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basisNames;
  std::vector<std::vector<Vec>> mult;  // mult[i][j] = coefficients of e_i * e_j
  Vec unit;

  const std::string& name(std::size_t i) const { return basisNames[i]; }

  Vec mulVec(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw DimensionMismatch("algebra mulVec");
    Vec r = zeroVec(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i].isZero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (y[j].isZero()) continue;
        Scalar c = x[i] * y[j];
        for (std::size_t k = 0; k < dim; ++k) r[k] += c * mult[i][j][k];
      }
    }
    return r;
  }

  Matrix leftMult(const Vec& x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vec col = mulVec(x, unitVec(dim, j));
      for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
    }
    return m;
  }

  Vec power(const Vec& x, std::size_t n) const {
    Vec r = unit;
    for (std::size_t i = 0; i < n; ++i) r = mulVec(r, x);
    return r;
  }
};

struct FinDimCoalgebra {
  std::size_t dim = 0;
  std::vector<std::string> basisNames;
  Matrix comult;  // (dim*dim) x dim, tensor index (j,k) flattened as j*dim+k
  Vec counit;     // covector of length dim

  Scalar counitOf(const Vec& x) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < dim; ++i) s += counit[i] * x[i];
    return s;
  }
};

struct Bialgebra {
  FinDimAlgebra alg;
  FinDimCoalgebra coa;
  std::size_t dim() const { return alg.dim; }
};

struct HopfAlgebra {
  Bialgebra bi;
  Matrix antipode;  // dim x dim
  std::size_t dim() const { return bi.dim(); }
};

// --- elements --------------------------------------------------------------

struct Element {
  const FinDimAlgebra* carrier = nullptr;
  Vec coeffs;
};

inline Element makeElement(const FinDimAlgebra& a, Vec coeffs) {
  if (coeffs.size() != a.dim) throw DimensionMismatch("element coefficients");
  return {&a, std::move(coeffs)};
}
inline Element basisElement(const FinDimAlgebra& a, std::size_t i) { return {&a, unitVec(a.dim, i)}; }

inline Element mul(const Element& x, const Element& y) {
  if (x.carrier != y.carrier) throw CarrierMismatch();
  return {x.carrier, x.carrier->mulVec(x.coeffs, y.coeffs)};
}
inline Element add(const Element& x, const Element& y) {
  if (x.carrier != y.carrier) throw CarrierMismatch();
  return {x.carrier, x.coeffs + y.coeffs};
}

// Coefficient tensor over an ordered list of factor dimensions, flattened
// row-major (last factor fastest).
struct TensorElement {
  std::vector<std::size_t> dims;
  Vec coeffs;

  std::size_t totalDim() const {
    std::size_t d = 1;
    for (auto x : dims) d *= x;
    return d;
  }
  static TensorElement zero(std::vector<std::size_t> dims) {
    TensorElement t{std::move(dims), {}};
    t.coeffs = zeroVec(t.totalDim());
    return t;
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.dims == b.dims && a.coeffs == b.coeffs;
  }
  TensorElement operator+(const TensorElement& o) const {
    if (dims != o.dims) throw DimensionMismatch("tensor element sum");
    return {dims, coeffs + o.coeffs};
  }
  TensorElement scaled(const Scalar& k) const { return {dims, k * coeffs}; }
};

inline TensorElement tensorOf(const std::vector<Vec>& factors) {
  std::vector<std::size_t> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) dims.push_back(f.size());
  TensorElement t = TensorElement::zero(dims);
  std::vector<std::size_t> idx(factors.size(), 0);
  std::size_t total = t.totalDim();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    Scalar c = 1;
    for (std::size_t f = factors.size(); f-- > 0;) {
      std::size_t i = rem % dims[f];
      rem /= dims[f];
      c *= factors[f][i];
      if (c.isZero()) break;
    }
    t.coeffs[flat] = c;
  }
  return t;
}

// comultiplication applied to an element: two legs over the same coalgebra
inline TensorElement comul(const FinDimCoalgebra& c, const Vec& x) {
  return {{c.dim, c.dim}, c.comult.apply(x)};
}

// iterated comultiplication: legs+1 tensor factors (legs = number of splits)
inline TensorElement comulIter(const FinDimCoalgebra& c, const Vec& x, std::size_t legs) {
  TensorElement t{{c.dim}, x};
  for (std::size_t step = 0; step < legs; ++step) {
    // expand the last factor through Delta
    std::size_t head = t.totalDim() / c.dim;
    TensorElement next = TensorElement::zero([&] {
      auto d = t.dims;
      d.push_back(c.dim);
      return d;
    }());
    for (std::size_t h = 0; h < head; ++h)
      for (std::size_t i = 0; i < c.dim; ++i) {
        const Scalar& v = t.coeffs[h * c.dim + i];
        if (v.isZero()) continue;
        for (std::size_t jk = 0; jk < c.dim * c.dim; ++jk) {
          const Scalar& d = c.comult.at(jk, i);
          if (!d.isZero()) next.coeffs[h * c.dim * c.dim + jk] += v * d;
        }
      }
    t = std::move(next);
  }
  return t;
}

inline Vec antipodeOf(const HopfAlgebra& h, const Vec& x) { return h.antipode.apply(x); }

// --- tensor product of algebras -------------------------------------------

inline FinDimAlgebra tensorAlgebra(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  FinDimAlgebra t;
  t.dim = a.dim * b.dim;
  t.basisNames.reserve(t.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) t.basisNames.push_back(a.name(i) + "(x)" + b.name(j));
  t.mult.assign(t.dim, std::vector<Vec>(t.dim));
  for (std::size_t i1 = 0; i1 < a.dim; ++i1)
    for (std::size_t j1 = 0; j1 < b.dim; ++j1)
      for (std::size_t i2 = 0; i2 < a.dim; ++i2)
        for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
          Vec r = zeroVec(t.dim);
          const Vec& pa = a.mult[i1][i2];
          const Vec& pb = b.mult[j1][j2];
          for (std::size_t k1 = 0; k1 < a.dim; ++k1) {
            if (pa[k1].isZero()) continue;
            for (std::size_t k2 = 0; k2 < b.dim; ++k2) r[k1 * b.dim + k2] = pa[k1] * pb[k2];
          }
          t.mult[i1 * b.dim + j1][i2 * b.dim + j2] = std::move(r);
        }
  t.unit = zeroVec(t.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) t.unit[i * b.dim + j] = a.unit[i] * b.unit[j];
  return t;
}

// --- law checkers ----------------------------------------------------------

inline std::string basisTripleName(const FinDimAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + a.name(i) + ", " + a.name(j) + ", " + a.name(k) + ")";
}

inline LawReport checkAlgebraLaws(const FinDimAlgebra& a) {
  LawReport rep;
  bool ok = true;
  std::string ce;
  for (std::size_t i = 0; i < a.dim && ok; ++i)
    for (std::size_t j = 0; j < a.dim && ok; ++j)
      for (std::size_t k = 0; k < a.dim && ok; ++k) {
        Vec lhs = a.mulVec(a.mult[i][j], unitVec(a.dim, k));
        Vec rhs = a.mulVec(unitVec(a.dim, i), a.mult[j][k]);
        if (lhs != rhs) {
          ok = false;
          ce = basisTripleName(a, i, j, k);
        }
      }
  rep.record("associativity", ok, ce);
  ok = true;
  ce.clear();
  for (std::size_t i = 0; i < a.dim && ok; ++i) {
    Vec e = unitVec(a.dim, i);
    if (a.mulVec(a.unit, e) != e || a.mulVec(e, a.unit) != e) {
      ok = false;
      ce = a.name(i);
    }
  }
  rep.record("unit laws", ok, ce);
  return rep;
}

inline LawReport checkCoalgebraLaws(const FinDimCoalgebra& c) {
  LawReport rep;
  bool ok = true;
  std::string ce;
  Matrix id = Matrix::identity(c.dim);
  Matrix left = kron(c.comult, id) * c.comult;   // (Delta (x) id) Delta
  Matrix right = kron(id, c.comult) * c.comult;  // (id (x) Delta) Delta
  for (std::size_t i = 0; i < c.dim && ok; ++i) {
    for (std::size_t r = 0; r < left.rows(); ++r)
      if (left.at(r, i) != right.at(r, i)) {
        ok = false;
        ce = c.basisNames[i];
        break;
      }
  }
  rep.record("coassociativity", ok, ce);
  ok = true;
  ce.clear();
  for (std::size_t i = 0; i < c.dim && ok; ++i) {
    // (eps (x) id) Delta and (id (x) eps) Delta on basis vector i
    Vec d = c.comult.apply(unitVec(c.dim, i));
    Vec l = zeroVec(c.dim), r = zeroVec(c.dim);
    for (std::size_t j = 0; j < c.dim; ++j)
      for (std::size_t k = 0; k < c.dim; ++k) {
        const Scalar& v = d[j * c.dim + k];
        if (v.isZero()) continue;
        l[k] += c.counit[j] * v;
        r[j] += c.counit[k] * v;
      }
    Vec e = unitVec(c.dim, i);
    if (l != e || r != e) {
      ok = false;
      ce = c.basisNames[i];
    }
  }
  rep.record("counit laws", ok, ce);
  return rep;
}

inline LawReport checkBialgebraLaws(const Bialgebra& b) {
  LawReport rep = checkAlgebraLaws(b.alg);
  rep.merge(checkCoalgebraLaws(b.coa));
  const std::size_t d = b.dim();
  // Delta is an algebra map into the tensor-square algebra
  FinDimAlgebra sq = tensorAlgebra(b.alg, b.alg);
  bool ok = true;
  std::string ce;
  for (std::size_t i = 0; i < d && ok; ++i)
    for (std::size_t j = 0; j < d && ok; ++j) {
      Vec lhs = b.coa.comult.apply(b.alg.mult[i][j]);
      Vec rhs = sq.mulVec(b.coa.comult.apply(unitVec(d, i)), b.coa.comult.apply(unitVec(d, j)));
      if (lhs != rhs) {
        ok = false;
        ce = "(" + b.alg.name(i) + ", " + b.alg.name(j) + ")";
      }
    }
  rep.record("comultiplication multiplicative", ok, ce);
  rep.record("comultiplication unital", b.coa.comult.apply(b.alg.unit) == sq.unit, "Delta(1) != 1(x)1");
  ok = true;
  ce.clear();
  for (std::size_t i = 0; i < d && ok; ++i)
    for (std::size_t j = 0; j < d && ok; ++j) {
      if (b.coa.counitOf(b.alg.mult[i][j]) !=
          b.coa.counit[i] * b.coa.counit[j]) {
        ok = false;
        ce = "(" + b.alg.name(i) + ", " + b.alg.name(j) + ")";
      }
    }
  rep.record("counit multiplicative", ok, ce);
  rep.record("counit unital", b.coa.counitOf(b.alg.unit) == Scalar(1), "eps(1) != 1");
  return rep;
}

inline LawReport checkHopfLaws(const HopfAlgebra& h) {
  LawReport rep = checkBialgebraLaws(h.bi);
  const std::size_t d = h.dim();
  bool ok = true;
  std::string ce;
  for (std::size_t i = 0; i < d && ok; ++i) {
    Vec delta = h.bi.coa.comult.apply(unitVec(d, i));
    Vec lhs = zeroVec(d), rhs = zeroVec(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& v = delta[j * d + k];
        if (v.isZero()) continue;
        lhs = lhs + v * h.bi.alg.mulVec(h.antipode.apply(unitVec(d, j)), unitVec(d, k));
        rhs = rhs + v * h.bi.alg.mulVec(unitVec(d, j), h.antipode.apply(unitVec(d, k)));
      }
    Vec target = h.bi.coa.counit[i] * h.bi.alg.unit;
    if (lhs != target || rhs != target) {
      ok = false;
      ce = h.bi.alg.name(i);
    }
  }
  rep.record("antipode axiom", ok, ce);
  return rep;
}

// --- presets ---------------------------------------------------------------

namespace presets {

// group algebra kC2: basis {1, g}, g^2 = 1, Delta g = g(x)g, S = id
inline HopfAlgebra kc2() {
  HopfAlgebra h;
  auto& a = h.bi.alg;
  a.dim = 2;
  a.basisNames = {"1", "g"};
  a.unit = {Scalar(1), Scalar(0)};
  a.mult = {{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}},
            {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}};
  auto& c = h.bi.coa;
  c.dim = 2;
  c.basisNames = a.basisNames;
  c.comult = Matrix(4, 2);
  c.comult.at(0, 0) = Scalar(1);  // 1 -> 1(x)1
  c.comult.at(3, 1) = Scalar(1);  // g -> g(x)g
  c.counit = {Scalar(1), Scalar(1)};
  h.antipode = Matrix::identity(2);
  return h;
}

// dual group algebra k^{C2}: basis of indicator functions {d1, dg}
inline HopfAlgebra kc2Dual() {
  HopfAlgebra h;
  auto& a = h.bi.alg;
  a.dim = 2;
  a.basisNames = {"d1", "dg"};
  a.unit = {Scalar(1), Scalar(1)};
  a.mult = {{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}},
            {{Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1)}}};
  auto& c = h.bi.coa;
  c.dim = 2;
  c.basisNames = a.basisNames;
  c.comult = Matrix(4, 2);
  // Delta d_h = sum_{h1 h2 = h} d_{h1} (x) d_{h2}
  c.comult.at(0, 0) = Scalar(1);  // d1 -> d1(x)d1 + dg(x)dg
  c.comult.at(3, 0) = Scalar(1);
  c.comult.at(1, 1) = Scalar(1);  // dg -> d1(x)dg + dg(x)d1
  c.comult.at(2, 1) = Scalar(1);
  c.counit = {Scalar(1), Scalar(0)};
  h.antipode = Matrix::identity(2);
  return h;
}

// Sweedler 4-dimensional Hopf algebra: basis {1, g, x, gx},
// g^2 = 1, x^2 = 0, xg = -gx, Delta x = x(x)1 + g(x)x, S x = -gx
inline HopfAlgebra sweedlerH4() {
  HopfAlgebra h;
  auto& a = h.bi.alg;
  a.dim = 4;
  a.basisNames = {"1", "g", "x", "gx"};
  a.unit = unitVec(4, 0);
  a.mult.assign(4, std::vector<Vec>(4, zeroVec(4)));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    a.mult[i][j] = zeroVec(4);
    if (c != 0) a.mult[i][j][k] = Scalar(c);
  };
  // 0=1, 1=g, 2=x, 3=gx
  for (std::size_t i = 0; i < 4; ++i) {
    a.mult[0][i] = unitVec(4, i);
    a.mult[i][0] = unitVec(4, i);
  }
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(2, 2, 0, 0);   // x x = 0
  set(2, 3, 0, 0);   // x gx = 0
  set(3, 1, 2, -1);  // gx g = -x
  set(3, 2, 0, 0);   // gx x = 0
  set(3, 3, 0, 0);   // gx gx = 0
  auto& c = h.bi.coa;
  c.dim = 4;
  c.basisNames = a.basisNames;
  c.comult = Matrix(16, 4);
  auto put = [&](std::size_t j, std::size_t k, std::size_t i, long v) { c.comult.at(j * 4 + k, i) = Scalar(v); };
  put(0, 0, 0, 1);  // 1 -> 1(x)1
  put(1, 1, 1, 1);  // g -> g(x)g
  put(2, 0, 2, 1);  // x -> x(x)1 + g(x)x
  put(1, 2, 2, 1);
  put(3, 1, 3, 1);  // gx -> gx(x)g + 1(x)gx
  put(0, 3, 3, 1);
  c.counit = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
  h.antipode = Matrix(4, 4);
  h.antipode.at(0, 0) = Scalar(1);
  h.antipode.at(1, 1) = Scalar(1);
  h.antipode.at(3, 2) = Scalar(-1);  // S x = -gx
  h.antipode.at(2, 3) = Scalar(1);   // S gx = x
  return h;
}

// truncated polynomial algebra k[x]/(x^n): basis {1, x, ..., x^{n-1}}
inline FinDimAlgebra truncatedPoly(std::size_t n, const std::string& var = "x") {
  FinDimAlgebra a;
  a.dim = n;
  for (std::size_t i = 0; i < n; ++i)
    a.basisNames.push_back(i == 0 ? "1" : (i == 1 ? var : var + "^" + std::to_string(i)));
  a.unit = unitVec(n, 0);
  a.mult.assign(n, std::vector<Vec>(n, zeroVec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) a.mult[i][j][i + j] = Scalar(1);
  return a;
}

// ground field as a one-dimensional Hopf algebra
inline HopfAlgebra groundField() {
  HopfAlgebra h;
  h.bi.alg.dim = 1;
  h.bi.alg.basisNames = {"1"};
  h.bi.alg.unit = {Scalar(1)};
  h.bi.alg.mult = {{{Scalar(1)}}};
  h.bi.coa.dim = 1;
  h.bi.coa.basisNames = {"1"};
  h.bi.coa.comult = Matrix(1, 1);
  h.bi.coa.comult.at(0, 0) = Scalar(1);
  h.bi.coa.counit = {Scalar(1)};
  h.antipode = Matrix::identity(1);
  return h;
}

}  // namespace presets

}  // namespace hopfkit
