#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fwh/matrix.hpp"
#include "fwh/rng.hpp"
#include "fwh/subspace.hpp"

using namespace fwh;

namespace {

Matrix<QField> qmat(std::vector<std::vector<long>> rows) {
  return Matrix<QField>::from_ints(QField{}, rows);
}

template <FieldDescriptor K>
Subspace<K> random_subspace(K field, std::size_t m, std::size_t rows,
                            SplitMix64& rng) {
  Matrix<K> a(field, rows, m);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a.at(i, j) = field.from_int(rng.range(-5, 5));
  return Subspace<K>::from_span(a);
}

}  // namespace

TEST_CASE("rank of dependent and independent rows over Q") {
  CHECK(rank(qmat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(qmat({{1, 2}, {2, 5}})) == 2);
  CHECK(rank(qmat({{0, 0}, {0, 0}})) == 0);
  // 3x3 with a hidden dependency: row2 = row0 + row1
  CHECK(rank(qmat({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}})) == 2);
  // fraction-free path must survive denominators: (3/2, 1) = 3 * (1/2, 1/3)
  Matrix<QField> f(QField{}, 2, 2);
  f.at(0, 0) = Rational(1, 2);
  f.at(0, 1) = Rational(1, 3);
  f.at(1, 0) = Rational(3, 2);
  f.at(1, 1) = Rational(1, 1);
  CHECK(rank(f) == 1);
  f.at(1, 1) = Rational(2, 1);
  CHECK(rank(f) == 2);
}

TEST_CASE("reduced row echelon form is canonical and idempotent") {
  const auto e = reduced_row_echelon(qmat({{2, 4, 6}, {1, 2, 4}}));
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.mat.at(0, 0) == Rational(1));
  CHECK(e.mat.at(0, 1) == Rational(2));
  CHECK(e.mat.at(0, 2) == Rational(0));
  CHECK(e.mat.at(1, 2) == Rational(1));
  const auto e2 = reduced_row_echelon(e.mat);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(e2.mat.at(i, j) == e.mat.at(i, j));
}

TEST_CASE("kernel of [[1,1,0],[0,0,1]] is span{(1,-1,0)}") {
  const auto k = kernel(qmat({{1, 1, 0}, {0, 0, 1}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains({Rational(1), Rational(-1), Rational(0)}));
  CHECK_FALSE(k.contains({Rational(1), Rational(1), Rational(0)}));
}

TEST_CASE("rank-nullity on seeded matrices over small prime fields") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    FpField f{p};
    SplitMix64 rng(kDefaultSeed ^ p);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
      Matrix<FpField> a(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = f.random(rng);
      CHECK(rank(a) + kernel(a).dim() == cols);
    }
  }
}

TEST_CASE("bareiss and pivot-count ranks agree over Q") {
  SplitMix64 rng(99);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    Matrix<QField> a(QField{}, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        a.at(i, j) = Rational(rng.range(-4, 4), 1 + rng.below(3));
    CHECK(bareiss_rank(a) == reduced_row_echelon(a).pivots.size());
  }
}

TEST_CASE("modular law: dim(U+W) + dim(U cap W) = dim U + dim W") {
  QField q;
  FpField f5{5};
  SplitMix64 rng(2024);
  for (int t = 0; t < 250; ++t) {
    const std::size_t m = 2 + rng.below(5);
    const auto u = random_subspace(q, m, 1 + rng.below(m), rng);
    const auto w = random_subspace(q, m, 1 + rng.below(m), rng);
    CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
  }
  for (int t = 0; t < 250; ++t) {
    const std::size_t m = 2 + rng.below(5);
    const auto u = random_subspace(f5, m, 1 + rng.below(m), rng);
    const auto w = random_subspace(f5, m, 1 + rng.below(m), rng);
    CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
  }
}

TEST_CASE("intersection is commutative up to canonical basis equality") {
  FpField f3{3};
  SplitMix64 rng(17);
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 2 + rng.below(4);
    const auto u = random_subspace(f3, m, 1 + rng.below(m), rng);
    const auto w = random_subspace(f3, m, 1 + rng.below(m), rng);
    CHECK(u.intersect(w) == w.intersect(u));
    CHECK(u.intersect(w).dim() <= std::min(u.dim(), w.dim()));
    CHECK(u.contains(u.intersect(w)));
  }
}

TEST_CASE("sum and containment basics") {
  QField q;
  const auto u = Subspace<QField>::from_span(qmat({{1, 0, 0, 0}}));
  CHECK(u.sum(Subspace<QField>::zero(q, 4)) == u);
  CHECK(Subspace<QField>::full(q, 4).contains(u));
  const auto q2 = Subspace<QField>::coordinate_tail(q, 4, 2);
  const auto q3 = Subspace<QField>::coordinate_tail(q, 4, 3);
  CHECK(q3.contains(q2));
  CHECK(q2.sum(q3) == q3);
  CHECK(q2.intersect(q3) == q2);
  CHECK(q2.dim() == 2);
  CHECK(q2.contains({Rational(0), Rational(0), Rational(5), Rational(-1)}));
  CHECK_FALSE(q2.contains({Rational(0), Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("mixing ambient dimensions or fields is rejected") {
  QField q;
  const auto u3 = Subspace<QField>::full(q, 3);
  const auto u4 = Subspace<QField>::full(q, 4);
  CHECK_THROWS_AS(u3.intersect(u4), std::invalid_argument);
  FpField f2{2}, f3{3};
  CHECK_THROWS_AS(Matrix<FpField>::from_rows(f2, {{f3.one(), f3.zero()}}),
                  field_mismatch_error);
}

TEST_CASE("complex elimination tolerates rounding") {
  CxField f{1e-9};
  Matrix<CxField> a(f, 2, 2);
  a.at(0, 0) = f.element({1.0, 0.0});
  a.at(0, 1) = f.element({2.0, 0.0});
  a.at(1, 0) = f.element({2.0, 0.0});
  a.at(1, 1) = f.element({4.0 + 1e-13, 0.0});  // dependent within tolerance
  CHECK(rank(a) == 1);
  a.at(1, 1) = f.element({4.1, 0.0});
  CHECK(rank(a) == 2);
  Matrix<CxField> rot(f, 2, 2);
  rot.at(0, 0) = f.element({0.0, 1.0});
  rot.at(0, 1) = f.element({1.0, 0.0});
  rot.at(1, 0) = f.element({-1.0, 0.0});
  rot.at(1, 1) = f.element({0.0, 1.0});  // row1 = i * row0
  CHECK(rank(rot) == 1);
}
