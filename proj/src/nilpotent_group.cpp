#include "nilgraph/nilpotent_group.hpp"

#include <sstream>

namespace nilgraph {

TwoStepPresentation::TwoStepPresentation(std::size_t n, std::size_t m)
    : n_(n), m_(m), c_(n * (n > 0 ? n - 1 : 0) / 2, std::vector<Integer>(m, Integer(0))) {
  for (std::size_t i = 0; i < n; ++i) x_names.push_back("x" + std::to_string(i + 1));
  for (std::size_t l = 0; l < m; ++l) y_names.push_back("y" + std::to_string(l + 1));
}

std::size_t TwoStepPresentation::index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_) throw DimensionError("structure constant index out of range");
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

const std::vector<Integer> &TwoStepPresentation::structure(std::size_t i, std::size_t j) const {
  return c_[index(i, j)];
}

void TwoStepPresentation::set_structure(std::size_t i, std::size_t j, std::vector<Integer> c) {
  if (c.size() != m_) throw DimensionError("structure constant vector has wrong length");
  c_[index(i, j)] = std::move(c);
}

void TwoStepPresentation::set_structure(std::size_t i, std::size_t j, std::size_t l, const Integer &value) {
  if (l >= m_) throw DimensionError("central generator index out of range");
  c_[index(i, j)][l] = value;
}

std::vector<Integer> TwoStepPresentation::bracket(std::size_t i, std::size_t j) const {
  if (i == j) return std::vector<Integer>(m_, Integer(0));
  if (i < j) return structure(i, j);
  auto c = structure(j, i);
  for (auto &x : c) x = -x;
  return c;
}

IntMatrix TwoStepPresentation::commutator_matrix() const {
  IntMatrix r(c_.size(), m_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    for (std::size_t l = 0; l < m_; ++l) r(k, l) = c_[k][l];
  return r;
}

std::pair<std::size_t, std::size_t> TwoStepPresentation::pair_of_row(std::size_t row) const {
  for (std::size_t i = 0; i + 1 < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (index(i, j) == row) return {i, j};
  throw DimensionError("row out of range");
}

// ---------------------------------------------------------------------------
// Element arithmetic

namespace {

void check(const TwoStepPresentation &p, const GroupElement &a) {
  if (a.z.size() != p.n() || a.t.size() != p.m()) throw DimensionError("group element does not fit the presentation");
}

} // namespace

GroupElement identity_element(const TwoStepPresentation &p) {
  return {std::vector<Integer>(p.n(), Integer(0)), std::vector<Integer>(p.m(), Integer(0))};
}

GroupElement x_generator(const TwoStepPresentation &p, std::size_t i) {
  auto g = identity_element(p);
  g.z.at(i) = 1;
  return g;
}

GroupElement y_generator(const TwoStepPresentation &p, std::size_t l) {
  auto g = identity_element(p);
  g.t.at(l) = 1;
  return g;
}

// Collecting x_j^{b_j} to the left past x_i^{a_i} (i > j) picks up
// [x_i, x_j]^{a_i b_j} = y^{-a_i b_j c_{ji}}.
GroupElement multiply(const TwoStepPresentation &p, const GroupElement &a, const GroupElement &b) {
  check(p, a);
  check(p, b);
  GroupElement r = a;
  for (std::size_t i = 0; i < p.n(); ++i) r.z[i] += b.z[i];
  for (std::size_t l = 0; l < p.m(); ++l) r.t[l] += b.t[l];
  for (std::size_t j = 0; j < p.n(); ++j) {
    if (sgn(b.z[j]) == 0) continue;
    for (std::size_t i = j + 1; i < p.n(); ++i) {
      if (sgn(a.z[i]) == 0) continue;
      const Integer coeff = a.z[i] * b.z[j];
      const auto &c = p.structure(j, i);
      for (std::size_t l = 0; l < p.m(); ++l) r.t[l] -= coeff * c[l];
    }
  }
  return r;
}

GroupElement inverse(const TwoStepPresentation &p, const GroupElement &a) {
  check(p, a);
  GroupElement r = identity_element(p);
  for (std::size_t i = 0; i < p.n(); ++i) r.z[i] = -a.z[i];
  for (std::size_t l = 0; l < p.m(); ++l) r.t[l] = -a.t[l];
  // a * r must have t = 0: t_a + t_r - sum_{i>j} a_i (-a_j) c_{ji} = 0
  for (std::size_t j = 0; j < p.n(); ++j)
    for (std::size_t i = j + 1; i < p.n(); ++i) {
      const Integer coeff = a.z[i] * a.z[j];
      if (sgn(coeff) == 0) continue;
      const auto &c = p.structure(j, i);
      for (std::size_t l = 0; l < p.m(); ++l) r.t[l] -= coeff * c[l];
    }
  return r;
}

GroupElement power(const TwoStepPresentation &p, const GroupElement &a, long k) {
  GroupElement base = k < 0 ? inverse(p, a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  GroupElement acc = identity_element(p);
  while (e) {
    if (e & 1) acc = multiply(p, acc, base);
    base = multiply(p, base, base);
    e >>= 1;
  }
  return acc;
}

GroupElement commutator(const TwoStepPresentation &p, const GroupElement &a, const GroupElement &b) {
  return multiply(p, multiply(p, inverse(p, a), inverse(p, b)), multiply(p, a, b));
}

// ---------------------------------------------------------------------------
// Constructors

TwoStepPresentation presentation_from_graph(const WeightedGraph &wg, const GraphStructure &s) {
  const Graph &g = wg.graph;
  TwoStepPresentation p(g.vertex_count(), g.edge_count());
  for (std::size_t pos = 0; pos < g.vertex_count(); ++pos) p.x_names[pos] = g.label(s.orders.vertices[pos]);
  for (std::size_t pos = 0; pos < g.edge_count(); ++pos) p.y_names[pos] = g.edge_label(s.orders.edges[pos]);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge &ed = g.edge(e);
    auto a = s.vertex_position(ed.u), b = s.vertex_position(ed.v);
    if (a > b) std::swap(a, b);
    p.set_structure(a, b, s.edge_position(e), wg.weight(e));
  }
  return p;
}

TwoStepPresentation remark_group_H() {
  TwoStepPresentation p(4, 3);
  p.set_structure(0, 2, 0, 1); // [x1,x3] = y1
  p.set_structure(0, 3, 1, 1); // [x1,x4] = y2
  p.set_structure(2, 3, 2, 1); // [x3,x4] = y3
  p.set_structure(1, 3, 0, 2); // [x2,x4] = y1^2
  p.set_structure(1, 2, 1, 1); // [x2,x3] = y2
  return p;
}

// ---------------------------------------------------------------------------
// Structure

StructureReport structural_subgroups(const TwoStepPresentation &p, const WeightedGraph *origin) {
  StructureReport r;
  const std::size_t n = p.n(), m = p.m();

  // z is central iff sum_i z_i [x_i, x_j] = 0 for every j
  IntMatrix pairing(n, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = p.bracket(i, j);
      for (std::size_t l = 0; l < m; ++l) pairing(i, j * m + l) = b[l];
    }
  r.center_x_basis = m > 0 ? left_integer_kernel(pairing) : IntMatrix::identity(n);
  r.center_rank = r.center_x_basis.rows() + m;

  const IntMatrix comm = p.commutator_matrix();
  if (comm.rows() == 0 || m == 0) {
    r.gamma2_basis = IntMatrix(0, m);
    r.sqrt_gamma2_basis = IntMatrix(0, m);
    r.gamma2_index = 1;
    r.abelianization_free_rank = n + m;
  } else {
    const SNFResult snf = smith_normal_form(comm);
    const IntMatrix vinv = to_integer(inverse(to_rational(snf.V)));
    r.gamma2_basis = IntMatrix(snf.rank, m);
    r.sqrt_gamma2_basis = IntMatrix(snf.rank, m);
    r.gamma2_index = 1;
    for (std::size_t k = 0; k < snf.rank; ++k) {
      const Integer &s = snf.S(k, k);
      r.gamma2_index *= s;
      for (std::size_t l = 0; l < m; ++l) {
        r.sqrt_gamma2_basis(k, l) = vinv(k, l);
        r.gamma2_basis(k, l) = s * vinv(k, l);
      }
      if (s > 1) r.abelianization_torsion.push_back(s);
    }
    r.abelianization_free_rank = n + m - snf.rank;
  }
  r.hirsch = n + m;

  if (origin) {
    r.unweighted_index = weight_product(*origin);
    r.isolated_vertices = isolated_vertices(origin->graph).isolated;
  }
  return r;
}

std::optional<std::string> automorphism_defect(const TwoStepPresentation &p, const IntMatrix &B, const IntMatrix &C) {
  if (B.rows() != p.n() || B.cols() != p.n()) return "B must be n x n";
  if (C.rows() != p.m() || C.cols() != p.m()) return "C must be m x m";
  const Integer db = det(B), dc = det(C);
  if (db != 1 && db != -1) return "B is not unimodular (det " + db.get_str() + ")";
  if (dc != 1 && dc != -1) return "C is not unimodular (det " + dc.get_str() + ")";
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      // [B x_i, B x_j] expanded bilinearly
      std::vector<Integer> lhs(p.m(), Integer(0));
      for (std::size_t a = 0; a < p.n(); ++a)
        for (std::size_t b = a + 1; b < p.n(); ++b) {
          const Integer minor = B(a, i) * B(b, j) - B(b, i) * B(a, j);
          if (sgn(minor) == 0) continue;
          const auto &c = p.structure(a, b);
          for (std::size_t l = 0; l < p.m(); ++l) lhs[l] += minor * c[l];
        }
      const auto rhs = C.apply(p.structure(i, j));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "relation [" << p.x_names[i] << "," << p.x_names[j] << "] is not preserved";
        return os.str();
      }
    }
  return std::nullopt;
}

} // namespace nilgraph
