#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "fwh/fermat_waring.hpp"
#include "fwh/probe.hpp"

using namespace fwh;

namespace {

Partition part(long m, std::vector<long> i0,
               std::vector<std::vector<long>> classes,
               TheoremMode mode = TheoremMode::theorem1) {
  Partition p{m, std::move(i0), std::move(classes), mode,
              mode == TheoremMode::theorem2 ? 1 : 0};
  p.validate();
  return p;
}

}  // namespace

TEST_CASE("cube roots of -1 in F_13") {
  // x^3 = 12 has solutions exactly {4, 10, 12}
  const auto p = part(2, {}, {{1, 2}});
  FpField f13{13};
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto mu = sample_mu(p, 3, f13, seed);
    REQUIRE(mu.values.size() == 1);
    REQUIRE(mu.values[0].size() == 1);
    const Fp root = mu.values[0][0];
    CHECK(root.pow(3) == f13.element(12));
    seen.insert(root.value());
  }
  CHECK(seen == std::set<std::uint64_t>{4, 10, 12});
}

TEST_CASE("complex pair class gets a primitive 2d-th root of unity") {
  const auto p = part(2, {}, {{1, 2}});
  CxField cx{};
  const auto mu = sample_mu(p, 13, cx, std::uint64_t{1});
  const std::complex<double> root = mu.values[0][0].value();
  CHECK(std::abs(std::pow(root, 13) + 1.0) < 1e-9);
  // the principal branch lands on exp(+-i pi/13)
  CHECK(std::abs(std::abs(root) - 1.0) < 1e-12);
  CHECK(root.real() == doctest::Approx(std::cos(M_PI / 13.0)));
  CHECK(std::abs(root.imag()) == doctest::Approx(std::sin(M_PI / 13.0)));
}

TEST_CASE("larger classes satisfy the Fermat relation with free tail") {
  const auto p = part(5, {4, 5}, {{1, 2, 3}});
  FpField f{1009};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto mu = sample_mu(p, 4, f, seed);
    REQUIRE(mu.values[0].size() == 2);
    Fp rel = f.one();
    for (const auto& v : mu.values[0]) {
      CHECK_FALSE(f.is_zero(v));
      rel += v.pow(4);
    }
    CHECK(f.is_zero(rel));
  }
}

TEST_CASE("theorem2 distinguished class avoids the relation") {
  const auto p =
      part(5, {}, {{1, 2}, {3, 4, 5}}, TheoremMode::theorem2);
  FpField f{10007};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto mu = sample_mu(p, 13, f, seed);
    Fp free_rel = f.one() + mu.values[0][0].pow(13);
    CHECK_FALSE(f.is_zero(free_rel));
    Fp bound_rel = f.one();
    for (const auto& v : mu.values[1]) bound_rel += v.pow(13);
    CHECK(f.is_zero(bound_rel));
  }
}

TEST_CASE("sample_mu is deterministic in the seed") {
  const auto p = part(6, {5}, {{1, 2}, {3, 4, 6}}, TheoremMode::theorem2);
  FpField f{10007};
  const auto a = sample_mu(p, 13, f, std::uint64_t{77});
  const auto b = sample_mu(p, 13, f, std::uint64_t{77});
  CHECK(a.values == b.values);
}

TEST_CASE("even degree can be unreachable: -1 need not be a d-th power") {
  // 10007 = 3 mod 4, so -1 is not a square, hence not a 4th power; a pair
  // class demands mu^4 = -1 and the sampler must give up loudly.
  const auto p = part(2, {}, {{1, 2}});
  try {
    sample_mu(p, 4, FpField{10007}, std::uint64_t{0});
    FAIL("expected the retry cap to trip");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("retry cap") != std::string::npos);
  }
  // 12289 = 1 + 3 * 2^12, so -1 is a 4th power there
  const auto mu = sample_mu(p, 4, FpField{12289}, std::uint64_t{0});
  FpField f{12289};
  CHECK(mu.values[0][0].pow(4) == -f.one());
}

TEST_CASE("diagonal plane bases match the defining equations") {
  FpField f{10007};
  const auto p = part(4, {}, {{1, 2}, {3, 4}});
  const auto mu = sample_mu(p, 13, f, std::uint64_t{3});
  const auto plane = build_diagonal_plane(p, mu);
  CHECK(plane.subspace.dim() == 2);
  const Fp z = f.zero(), o = f.one();
  CHECK(plane.subspace.contains({o, mu.values[0][0], z, z}));
  CHECK(plane.subspace.contains({z, z, o, mu.values[1][0]}));
  CHECK_FALSE(plane.subspace.contains({o, z, z, z}));

  const auto q = part(4, {4}, {{1, 2, 3}});
  const auto muq = sample_mu(q, 13, f, std::uint64_t{4});
  const auto line = build_diagonal_plane(q, muq);
  CHECK(line.subspace.dim() == 1);
  CHECK(line.subspace.contains({o, muq.values[0][0], muq.values[0][1], z}));
}

TEST_CASE("plane dimension always equals the class count") {
  FpField f{10007};
  for (auto mode : {TheoremMode::theorem1, TheoremMode::theorem2}) {
    std::uint64_t seed = 0;
    for_each_partition(5, mode, [&](const Partition& p) {
      const auto mu = sample_mu(p, 31, f, seed++);
      const auto plane = build_diagonal_plane(p, mu);
      CHECK(plane.subspace.dim() == static_cast<std::size_t>(p.l()));
    });
  }
}

TEST_CASE("mu built for a different partition is rejected") {
  FpField f{10007};
  const auto p = part(4, {}, {{1, 2}, {3, 4}});
  const auto q = part(4, {}, {{1, 3}, {2, 4}});
  const auto mu = sample_mu(p, 13, f, std::uint64_t{5});
  CHECK_THROWS_AS(build_diagonal_plane(q, mu), std::invalid_argument);
}

TEST_CASE("probe of a generic hypersurface section stays clean") {
  const auto spec =
      build_hypersurface(2, TheoremMode::theorem2, 17, FpField{10007});
  const auto v = plane_section_model(spec);
  const auto rep = probe(v, spec.mode, spec.d, 500, std::uint64_t{21});
  CHECK(rep.pool.size() == 22);
  CHECK(rep.m == 4);
  CHECK(rep.n == 2);
  CHECK(rep.clean);
  CHECK_FALSE(rep.vacuous);
  CHECK(rep.max_dim <= 1);
  CHECK(rep.flagged_partitions.empty());
  std::uint64_t total = 0;
  for (const auto& b : rep.histogram) total += b.draws;
  CHECK(total == rep.trials);

  const auto again = probe(v, spec.mode, spec.d, 500, std::uint64_t{21});
  CHECK(again.max_dim == rep.max_dim);
  for (std::size_t i = 0; i < rep.histogram.size(); ++i) {
    CHECK(again.histogram[i].draws == rep.histogram[i].draws);
    CHECK(again.histogram[i].max_dim == rep.histogram[i].max_dim);
  }
}

TEST_CASE("zero trials and empty pools are vacuously clean") {
  const auto spec =
      build_hypersurface(2, TheoremMode::theorem2, 17, FpField{10007});
  const auto v = plane_section_model(spec);
  const auto rep = probe(v, spec.mode, spec.d, 0, std::uint64_t{1});
  CHECK(rep.vacuous);
  CHECK(rep.clean);
  CHECK_FALSE(rep.warning.empty());

  // m = 3 in theorem1 mode has no partition with l >= 2
  const auto t1 =
      build_hypersurface(2, TheoremMode::theorem1, 17, FpField{10007});
  const auto rep2 = probe(plane_section_model(t1), t1.mode, t1.d, 100,
                          std::uint64_t{1});
  CHECK(rep2.vacuous);
  CHECK(rep2.pool.empty());
}

TEST_CASE("a planted bad V is flagged by its own partition") {
  FpField f{10007};
  // distinguished singleton + forced pair: every redraw rebuilds this exact
  // plane, so the first hit on the partition flags it
  const auto p = part(4, {4}, {{1}, {2, 3}}, TheoremMode::theorem2);
  const auto mu = sample_mu(p, 13, f, std::uint64_t{8});
  const auto bad = construct_bad_V(p, mu, 2, std::uint64_t{9});
  CHECK(bad.dim() == 3);
  const auto plane = build_diagonal_plane(p, mu);
  CHECK(plane.subspace.intersect(bad).dim() == 2);

  const auto rep = probe(bad, TheoremMode::theorem2, 13, 400,
                         std::uint64_t{10});
  CHECK_FALSE(rep.clean);
  CHECK(rep.max_dim >= 2);
  bool own = false;
  for (const auto idx : rep.flagged_partitions) {
    const auto& q = rep.pool[idx];
    own = own || (q.i0 == p.i0 && q.classes == p.classes);
  }
  CHECK(own);
}

TEST_CASE("construct_bad_V rejects lines and tight ambients") {
  FpField f{10007};
  const auto line = part(4, {3, 4}, {{1, 2}});
  const auto mu = sample_mu(line, 13, f, std::uint64_t{2});
  CHECK_THROWS_AS(construct_bad_V(line, mu, 2, std::uint64_t{1}),
                  std::invalid_argument);
  const auto p = part(4, {}, {{1, 2}, {3, 4}});
  const auto mup = sample_mu(p, 13, f, std::uint64_t{2});
  CHECK_THROWS_AS(construct_bad_V(p, mup, 4, std::uint64_t{1}),
                  std::invalid_argument);
}

TEST_CASE("complex-coefficient planes intersect exactly like F_p ones") {
  CxField cx{};
  const auto p = part(4, {}, {{1, 2}, {3, 4}});
  const auto mu = sample_mu(p, 13, cx, std::uint64_t{6});
  const auto plane = build_diagonal_plane(p, mu);
  CHECK(plane.subspace.dim() == 2);
  // a generic complex 3-space meets the 2-plane in a line: 2+3-4 = 1
  Matrix<CxField> span(cx, 3, 4);
  const double entries[3][4][2] = {
      {{1.3, -0.7}, {0.4, 2.1}, {-1.9, 0.8}, {0.6, -0.2}},
      {{-0.5, 1.1}, {2.7, -0.3}, {0.9, 1.4}, {-1.2, 0.5}},
      {{0.8, 0.6}, {-1.4, -2.2}, {1.1, -0.9}, {2.3, 1.7}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      span.at(i, j) = cx.element({entries[i][j][0], entries[i][j][1]});
  const auto v = Subspace<CxField>::from_span(span);
  REQUIRE(v.dim() == 3);
  CHECK(plane.subspace.intersect(v).dim() == 1);
}
