#include "nilgraph/catalog.hpp"
#include "nilgraph/nilpotent_group.hpp"

#include <doctest.h>

#include <random>

using namespace nilgraph;

namespace {

TwoStepPresentation heisenberg(long n) {
  const auto wg = catalog::heisenberg_graph(n);
  return presentation_from_graph(wg, analyze(wg.graph));
}

GroupElement element(std::vector<long> z, std::vector<long> t) {
  GroupElement g;
  for (long x : z) g.z.emplace_back(x);
  for (long x : t) g.t.emplace_back(x);
  return g;
}

IntMatrix as_matrix(long n, const GroupElement &g) { return catalog::heisenberg_matrix(n, g.z[0], g.z[1], g.t[0]); }

} // namespace

TEST_CASE("presentation from graph") {
  const auto h = heisenberg(3);
  CHECK(h.n() == 2);
  CHECK(h.m() == 1);
  CHECK(h.structure(0, 1) == std::vector<Integer>{3});

  const auto wg = catalog::main_counterexample_weighted(4);
  const auto p = presentation_from_graph(wg, analyze(wg.graph));
  const auto M = p.commutator_matrix();
  std::size_t nonzero = 0;
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (M(r, c) != 0) {
        ++nonzero;
        CHECK(M(r, c) == (c == 6 ? 4 : 1));
      }
  CHECK(nonzero == 8);

  const auto e = WeightedGraph::unweighted(catalog::edgeless_graph(3));
  const auto pe = presentation_from_graph(e, analyze(e.graph));
  CHECK(pe.m() == 0);
}

TEST_CASE("multiplication examples") {
  const auto h1 = heisenberg(1);
  const auto v1 = x_generator(h1, 0), v2 = x_generator(h1, 1);
  CHECK(multiply(h1, v2, v1) == element({1, 1}, {-1}));
  CHECK(multiply(h1, v1, identity_element(h1)) == v1);
  CHECK(commutator(h1, v1, v2) == element({0, 0}, {1}));
  CHECK(power(h1, v1, 2) == element({2, 0}, {0}));
  CHECK(commutator(heisenberg(2), x_generator(heisenberg(2), 0), x_generator(heisenberg(2), 1)) ==
        element({0, 0}, {2}));
  TwoStepPresentation ab(3, 0);
  CHECK(inverse(ab, element({1, -2, 5}, {})) == element({-1, 2, -5}, {}));
}

TEST_CASE("Heisenberg matrix oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-9, 9);
  for (long n = 1; n <= 3; ++n) {
    const auto p = heisenberg(n);
    for (int i = 0; i < 200; ++i) {
      const auto a = element({d(rng), d(rng)}, {d(rng)});
      const auto b = element({d(rng), d(rng)}, {d(rng)});
      CHECK(as_matrix(n, multiply(p, a, b)) == as_matrix(n, a) * as_matrix(n, b));
    }
  }
}

TEST_CASE("structural subgroups") {
  for (long n = 1; n <= 4; ++n) {
    const auto wg = catalog::heisenberg_graph(n);
    const auto r = structural_subgroups(presentation_from_graph(wg, analyze(wg.graph)), &wg);
    CHECK(r.center_rank == 1);
    CHECK(r.hirsch == 3);
    CHECK(r.abelianization_free_rank == 2);
    CHECK(r.abelianization_torsion == (n == 1 ? std::vector<Integer>{} : std::vector<Integer>{n}));
    CHECK(r.gamma2_index == n);
    REQUIRE(r.unweighted_index);
    CHECK(*r.unweighted_index == n);
  }
  const auto m = WeightedGraph::unweighted(catalog::main_counterexample_graph());
  const auto rm = structural_subgroups(presentation_from_graph(m, analyze(m.graph)), &m);
  CHECK(rm.hirsch == 17);
  CHECK(rm.gamma2_index == 1);
  CHECK(rm.abelianization_free_rank == 9);
  CHECK(rm.abelianization_torsion.empty());

  const auto e = WeightedGraph::unweighted(catalog::edgeless_graph(4));
  const auto re = structural_subgroups(presentation_from_graph(e, analyze(e.graph)), &e);
  CHECK(re.center_rank == 4);
  CHECK(re.hirsch == 4);
}

TEST_CASE("index equals the product of the weights") {
  const Graph g = catalog::cycle_graph(5);
  const WeightedGraph wg(g, {2, 3, 1, 4, 5});
  const auto r = structural_subgroups(presentation_from_graph(wg, analyze(g)), &wg);
  CHECK(r.gamma2_index == 120);
  CHECK(r.gamma2_index == weight_product(wg));
}

TEST_CASE("saturation of a non-graph presentation") {
  // [x1,x2] = y^2, [x1,x3] = y^4: gamma2 = <y^2>, sqrt(gamma2) = <y>
  TwoStepPresentation p(3, 1);
  p.set_structure(0, 1, 0, 2);
  p.set_structure(0, 2, 0, 4);
  const auto r = structural_subgroups(p);
  CHECK(r.gamma2_index == 2);
  CHECK(r.sqrt_gamma2_basis == IntMatrix{{1}});
  CHECK(r.abelianization_torsion == std::vector<Integer>{2});
}

TEST_CASE("remark group H") {
  const auto h = remark_group_H();
  CHECK(h.n() == 4);
  CHECK(h.m() == 3);
  CHECK(h.structure(0, 2) == std::vector<Integer>{1, 0, 0});
  CHECK(h.structure(1, 3) == std::vector<Integer>{2, 0, 0});
  CHECK(h.structure(0, 1) == std::vector<Integer>{0, 0, 0});
  CHECK(h.structure(0, 3) == std::vector<Integer>{0, 1, 0});
  CHECK(h.structure(2, 3) == std::vector<Integer>{0, 0, 1});
  CHECK(h.structure(1, 2) == std::vector<Integer>{0, 1, 0});
  CHECK(h.bracket(3, 1) == std::vector<Integer>{-2, 0, 0});
}

TEST_CASE("automorphism defect") {
  const auto h = remark_group_H();
  CHECK_FALSE(automorphism_defect(h, catalog::remark_H_B(), catalog::remark_H_C()));
  CHECK_FALSE(automorphism_defect(h, IntMatrix::identity(4), IntMatrix::identity(3)));
  CHECK(automorphism_defect(h, IntMatrix::identity(4), Integer(-1) * IntMatrix::identity(3)));
  CHECK(automorphism_defect(h, Integer(2) * IntMatrix::identity(4), IntMatrix::identity(3)));
}
