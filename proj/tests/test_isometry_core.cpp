#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "isocompat/errors.hpp"
#include "isocompat/group_spec.hpp"
#include "isocompat/haar.hpp"
#include "isocompat/rng.hpp"
#include "isocompat/twist.hpp"

using namespace isocompat;

namespace {

Vec vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Vec random_vec(int n, CounterRng& rng) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = 3.0 * rng.normal();
  return v;
}

GroupSpec so3_so2() { return block_orthogonal({{3, Flavor::SO}, {2, Flavor::SO}}); }
GroupSpec o2_o2() { return block_orthogonal({{2, Flavor::O}, {2, Flavor::O}}); }

Mat block_swap4() {
  Mat t = Mat::Zero(4, 4);
  t(0, 2) = t(1, 3) = t(2, 0) = t(3, 1) = 1.0;
  return t;
}

Mat diag(std::initializer_list<double> xs) { return vec(xs).asDiagonal(); }

std::vector<GroupSpec> compact_specs() {
  return {block_orthogonal({{2, Flavor::SO}}), so3_so2(), o2_o2(), block_orthogonal({{4, Flavor::SO}, {1, Flavor::O}}),
          block_orthogonal({{5, Flavor::O}}), unitary_torus(3), unitary_torus(2, false),
          product({block_orthogonal({{2, Flavor::SO}}), unitary_torus(2)})};
}

}  // namespace

TEST_CASE("apply: identity, quarter turn, translation") {
  CHECK(apply(EuclideanIsometry::identity(3), vec({1, 2, 3})) == vec({1, 2, 3}));
  const Vec r = apply(EuclideanIsometry::plane_rotation(2, 0, 1, M_PI / 2), vec({1, 0}));
  CHECK(r(0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(apply(EuclideanIsometry::translation(vec({0, 0, 5})), vec({1, 2, 3})) == vec({1, 2, 8}));
}

TEST_CASE("apply rejects mismatched dimensions") {
  CHECK_THROWS_AS(apply(EuclideanIsometry::identity(3), vec({1, 2})), DimensionError);
  CHECK_THROWS_AS(compose(EuclideanIsometry::identity(3), EuclideanIsometry::identity(2)), DimensionError);
}

TEST_CASE("constructor enforces orthogonality at 1e-12") {
  Mat a = Mat::Identity(2, 2);
  a(0, 0) += 1e-9;
  CHECK_THROWS_AS(EuclideanIsometry(a, Vec::Zero(2)), InvariantError);
  CHECK_NOTHROW(EuclideanIsometry(Mat::Identity(2, 2), Vec::Zero(2)));
}

TEST_CASE("compose examples") {
  const auto g = EuclideanIsometry(EuclideanIsometry::plane_rotation(3, 0, 2, 0.7).matrix(), vec({1, -2, 0.5}));
  CHECK(compose(g, EuclideanIsometry::identity(3)).approx_equal(g, 0.0));
  const auto t = compose(EuclideanIsometry::translation(vec({1, 2})), EuclideanIsometry::translation(vec({-3, 0.5})));
  CHECK(t.approx_equal(EuclideanIsometry::translation(vec({-2, 2.5})), 1e-15));
  const auto rot = compose(EuclideanIsometry::plane_rotation(2, 0, 1, 0.4), EuclideanIsometry::plane_rotation(2, 0, 1, 1.1));
  CHECK(rot.approx_equal(EuclideanIsometry::plane_rotation(2, 0, 1, 1.5), 1e-15));
}

TEST_CASE("property: distances preserved, compose is action composition, associativity, inverse") {
  for (const auto& spec : compact_specs()) {
    const int n = spec.dimension;
    const auto gs = sample_group(spec, 30, 11);
    CounterRng rng(99, 1, static_cast<std::uint64_t>(n));
    for (std::size_t i = 0; i + 2 < gs.size(); ++i) {
      const auto g = compose(gs[i], EuclideanIsometry::translation(random_vec(n, rng)));
      const auto& h = gs[i + 1];
      const auto& k = gs[i + 2];
      const Vec x = random_vec(n, rng), y = random_vec(n, rng);
      CHECK(std::abs((apply(g, x) - apply(g, y)).norm() - (x - y).norm()) < 1e-12);
      CHECK((apply(compose(g, h), x) - apply(g, apply(h, x))).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(compose(compose(g, h), k).approx_equal(compose(g, compose(h, k)), 1e-12));
      CHECK(compose(g, g.inverse()).approx_equal(EuclideanIsometry::identity(n), 1e-12));
      CHECK(g.inverse().matrix() == g.matrix().transpose());
    }
  }
}

TEST_CASE("sample_group: lattice enumeration") {
  const auto lattice = translation_lattice({vec({0, 0, 1})});
  const auto gs = sample_group(lattice, 101, 5);
  REQUIRE(gs.size() == 101);
  std::set<long> coeffs;
  for (const auto& g : gs) {
    CHECK(g.matrix() == Mat::Identity(3, 3));
    CHECK(g.translation_part()(0) == 0.0);
    CHECK(g.translation_part()(1) == 0.0);
    coeffs.insert(std::lround(g.translation_part()(2)));
  }
  CHECK(coeffs.size() == 101);
  CHECK(*coeffs.begin() == -50);
  CHECK(*coeffs.rbegin() == 50);
}

TEST_CASE("sample_group: SO(2) replays the documented stream") {
  const auto spec = block_orthogonal({{2, Flavor::SO}});
  const auto gs = sample_group(spec, 4, 2024);
  std::set<double> angles;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CounterRng replay(2024, 0, i);
    const double angle = replay.uniform(0.0, 2.0 * M_PI);
    angles.insert(angle);
    CHECK(gs[i].matrix()(0, 0) == std::cos(angle));
    CHECK(gs[i].matrix()(1, 0) == std::sin(angle));
    CHECK(gs[i].matrix()(0, 1) == -std::sin(angle));
  }
  CHECK(angles.size() == 4);
}

TEST_CASE("sample_group: finite set returns its elements") {
  const std::vector<EuclideanIsometry> elems{EuclideanIsometry::identity(2), EuclideanIsometry::linear(diag({-1, 1})),
                                             EuclideanIsometry::translation(vec({0.5, 0}))};
  const auto gs = sample_group(finite_set(elems), 3, 0);
  REQUIRE(gs.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(gs[i].approx_equal(elems[i], 0.0));
}

TEST_CASE("property: samples are reproducible, thread independent, orthogonal and members") {
  for (const auto& spec : compact_specs()) {
    const auto a = sample_group(spec, 200, 7, 1);
    const auto b = sample_group(spec, 200, 7, 4);
    const auto c = sample_group(spec, 200, 7, 1);
    REQUIRE(a.size() == 200);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].matrix() == b[i].matrix());
      CHECK(a[i].matrix() == c[i].matrix());
      CHECK(orthogonality_defect(a[i].matrix()) <= 1e-12);
      CHECK(is_member(spec, a[i]));
    }
  }
}

TEST_CASE("property: O(k) samples hit both determinant signs; SO(k) never flips") {
  const auto o = sample_group(block_orthogonal({{3, Flavor::O}}), 200, 3);
  int negative = 0;
  for (const auto& g : o) negative += g.matrix().determinant() < 0 ? 1 : 0;
  CHECK(negative > 60);
  CHECK(negative < 140);
  for (const auto& g : sample_group(block_orthogonal({{4, Flavor::SO}}), 200, 3)) CHECK(g.matrix().determinant() > 0);
}

TEST_CASE("membership examples") {
  CHECK_FALSE(is_member(so3_so2(), EuclideanIsometry::linear(diag({-1, -1, -1, 1, 1}))));
  for (const auto& spec : compact_specs()) CHECK(is_member(spec, EuclideanIsometry::identity(spec.dimension)));
  const auto lattice = translation_lattice({vec({0, 0, 1})});
  CHECK(is_member(lattice, EuclideanIsometry::identity(3)));
  CHECK_FALSE(is_member(lattice, EuclideanIsometry::translation(vec({0, 0, 0.5}))));
  CHECK(is_member(lattice, EuclideanIsometry::translation(vec({0, 0, -7}))));
  CHECK_FALSE(is_member(lattice, EuclideanIsometry::translation(vec({0.1, 0, 1}))));
  CHECK_FALSE(is_member(o2_o2(), EuclideanIsometry::linear(block_swap4())));
  CHECK_FALSE(is_member(so3_so2(), EuclideanIsometry::translation(vec({0, 0, 0, 0, 1e-6}))));
  CHECK_THROWS_AS(is_member(so3_so2(), EuclideanIsometry::identity(4)), DimensionError);
}

TEST_CASE("membership: unitary torus") {
  const auto torus = unitary_torus(2);
  // diag(e^{i a}, e^{-i a}) in SU(2); diag(e^{i a}, 1) only in U(2).
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = std::polar(1.0, 0.3);
  d(1, 1) = std::polar(1.0, -0.3);
  CHECK(is_member(torus, EuclideanIsometry::linear(complex_to_real(d))));
  d(1, 1) = 1.0;
  CHECK_FALSE(is_member(torus, EuclideanIsometry::linear(complex_to_real(d))));
  CHECK(is_member(unitary_torus(2, false), EuclideanIsometry::linear(complex_to_real(d))));
  // A real rotation mixing z1 and z2 is orthogonal, commutes with J, but is not diagonal.
  Eigen::MatrixXcd mix(2, 2);
  mix << 0, 1, -1, 0;
  CHECK_FALSE(is_member(torus, EuclideanIsometry::linear(complex_to_real(mix))));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(translation_lattice({vec({1, 0}), vec({2, 0})}), InvariantError);
  CHECK_THROWS(block_orthogonal({{0, Flavor::SO}}));
  GroupSpec bad = block_orthogonal({{2, Flavor::SO}});
  bad.dimension = 3;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("verify_twist examples") {
  const auto r1 = verify_twist(with_twist(so3_so2(), EuclideanIsometry::linear(diag({-1, -1, -1, 1, 1}))));
  CHECK(r1.tau_involutive);
  CHECK(r1.tau_outside);
  CHECK(r1.normalizes);
  CHECK(r1.character_homomorphism);
  CHECK(r1.normalizer_checks >= 100);
  CHECK(r1.homomorphism_checks == 100);

  const auto r2 = verify_twist(with_twist(o2_o2(), EuclideanIsometry::linear(block_swap4())));
  CHECK(r2.all_pass());

  const auto r3 = verify_twist(
      with_twist(block_orthogonal({{2, Flavor::SO}}), EuclideanIsometry::plane_rotation(2, 0, 1, M_PI / 3)));
  CHECK_FALSE(r3.tau_involutive);
  CHECK(r3.involution_defect > 0.5);
}

TEST_CASE("verify_twist: a tau that does not normalize H fails") {
  // Swapping a 2-block with part of a 3-block does not preserve SO(3) x SO(2).
  Mat t = Mat::Identity(5, 5);
  t(2, 2) = t(3, 3) = 0.0;
  t(2, 3) = t(3, 2) = 1.0;
  const auto r = verify_twist(with_twist(so3_so2(), EuclideanIsometry::linear(t)));
  CHECK(r.tau_involutive);
  CHECK_FALSE(r.normalizes);
}

TEST_CASE("character: coset bit is multiplicative on sampled words") {
  const auto spec = with_twist(o2_o2(), EuclideanIsometry::linear(block_swap4()));
  const auto elems = sample_twisted(spec, 64, 17);
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
    const auto prod = elems[i] * elems[i + 1];
    CHECK(character(prod) == character(elems[i]) * character(elems[i + 1]));
    CHECK(is_member(spec.base(), prod.iso) == !prod.odd);
  }
  int odd = 0;
  for (const auto& e : elems) odd += e.odd ? 1 : 0;
  CHECK(odd > 0);
  CHECK(odd < 64);
}
