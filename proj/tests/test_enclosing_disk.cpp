#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_util.hpp"
#include "varbounds/enclosing_disk.hpp"
#include "varbounds/oracle.hpp"

using namespace varbounds;
using doctest::Approx;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kTwoPi = 6.283185307179586476925286766559;

ComplexSample triple() {
  return ComplexSample({{-0.5, kSqrt3 / 2.0}, {0.0, 0.0}, {0.5, kSqrt3 / 2.0}});
}

}  // namespace

TEST_CASE("diameter pair") {
  const Disk d = min_enclosing_disk(ComplexSample({{0, 0}, {2, 0}}));
  CHECK(d.center.real() == Approx(1.0));
  CHECK(d.center.imag() == Approx(0.0).scale(1.0));
  CHECK(d.radius == Approx(1.0));
}

TEST_CASE("right triangle circumcircle") {
  const Disk d = min_enclosing_disk(ComplexSample({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(d.center.real() == Approx(0.5));
  CHECK(d.center.imag() == Approx(0.5));
  CHECK(d.radius == Approx(std::sqrt(2.0) / 2.0));
}

TEST_CASE("equilateral triple circumcircle sits on the mean") {
  const Disk d = min_enclosing_disk(triple());
  CHECK(d.center.real() == Approx(0.0).scale(1.0));
  CHECK(d.center.imag() == Approx(1.0 / kSqrt3));
  CHECK(d.radius == Approx(1.0 / kSqrt3));
}

TEST_CASE("degenerate inputs") {
  const Complex p{2.5, -1.0};
  CHECK(min_enclosing_disk(ComplexSample(std::vector<Complex>{p})).radius == 0.0);
  CHECK(min_enclosing_disk(ComplexSample({p, p, p})).radius == 0.0);
  // Collinear points reduce to the widest diameter pair.
  const Disk line = min_enclosing_disk(
      ComplexSample({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0.5, 0.5}}));
  CHECK(line.center.real() == Approx(1.5));
  CHECK(line.center.imag() == Approx(1.5));
  CHECK(line.radius == Approx(1.5 * std::sqrt(2.0)));
}

TEST_CASE("agrees with the exhaustive oracle and contains every point") {
  auto gen = testutil::rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexSample sample(testutil::random_cloud(gen, size(gen)));
    const Disk fast = min_enclosing_disk(sample);
    const Disk brute = oracle::min_disk_brute(sample);
    REQUIRE(std::fabs(fast.radius - brute.radius) <=
            1e-9 * std::max(1.0, brute.radius));
    for (const Complex& p : sample) REQUIRE(fast.contains(p));
  }
}

TEST_CASE("deterministic across calls") {
  auto gen = testutil::rng(12);
  const ComplexSample sample(testutil::random_cloud(gen, 30));
  const Disk a = min_enclosing_disk(sample);
  const Disk b = min_enclosing_disk(sample);
  CHECK(a.center == b.center);
  CHECK(a.radius == b.radius);
}

TEST_CASE("inequality chain on the worked examples") {
  SUBCASE("equilateral triple saturates everything") {
    const BoundReport r = disk_inequality_chain(triple());
    CHECK(*r.find_value("sz2") == Approx(1.0 / 3.0));
    CHECK(*r.find_value("rz2") == Approx(1.0 / 3.0));
    CHECK(*r.find_value("gap2_over_3") == Approx(1.0 / 3.0));
    CHECK(*r.satisfied);
  }
  SUBCASE("two points") {
    const BoundReport r = disk_inequality_chain(ComplexSample({{0, 0}, {2, 0}}));
    CHECK(*r.find_value("sz2") == Approx(1.0));
    CHECK(*r.find_value("rz2") == Approx(1.0));
    CHECK(*r.find_value("gap2_over_3") == Approx(4.0 / 3.0));
    CHECK(*r.satisfied);
  }
  SUBCASE("random clouds satisfy the chain") {
    auto gen = testutil::rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexSample sample(testutil::random_cloud(gen, 20));
      CHECK(*disk_inequality_chain(sample).satisfied);
    }
  }
  CHECK_THROWS_AS(
      disk_inequality_chain(ComplexSample(std::vector<Complex>{{1, 0}})),
      std::invalid_argument);
}

TEST_CASE("circle-on-mean check") {
  SUBCASE("cube roots of unity give the unit disk") {
    std::vector<Complex> roots;
    for (int k = 0; k < 3; ++k)
      roots.push_back(std::polar(1.0, kTwoPi * k / 3.0));
    const CircleOnMeanResult r = circle_on_mean_check(ComplexSample(roots));
    CHECK(r.on_circle);
    CHECK(*r.report.satisfied);
    CHECK(r.disk.radius == Approx(1.0));
    CHECK(std::abs(r.disk.center) == Approx(0.0).scale(1.0));
  }
  SUBCASE("symmetric pair") {
    const CircleOnMeanResult r =
        circle_on_mean_check(ComplexSample({{0, 0}, {2, 0}}));
    CHECK(r.on_circle);
    CHECK(*r.report.satisfied);
    CHECK(r.disk.radius == Approx(1.0));
    CHECK(r.disk.center.real() == Approx(1.0));
  }
  SUBCASE("unequal distances") {
    const CircleOnMeanResult r =
        circle_on_mean_check(ComplexSample({{0, 0}, {1, 0}, {3, 0}}));
    CHECK_FALSE(r.on_circle);
  }
  CHECK_THROWS_AS(circle_on_mean_check(triple(), -0.5), std::invalid_argument);
}

TEST_CASE("sz is never above rz") {
  auto gen = testutil::rng(14);
  std::uniform_int_distribution<std::size_t> size(2, 40);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexSample sample(testutil::random_cloud(gen, size(gen)));
    const double sz2 = dispersion(sample).sz2;
    const Disk disk = min_enclosing_disk(sample);
    REQUIRE(sz2 <= disk.radius * disk.radius + 1e-9 * std::max(1.0, sz2));
  }
}

TEST_CASE("centrally symmetric points on a circle recover its radius") {
  auto gen = testutil::rng(15);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> radius(0.5, 10.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<std::size_t> pairs(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex center{coord(gen), coord(gen)};
    const double r = radius(gen);
    std::vector<Complex> pts;
    for (std::size_t k = pairs(gen); k-- > 0;) {
      const Complex offset = std::polar(r, angle(gen));
      pts.push_back(center + offset);
      pts.push_back(center - offset);
    }
    const Disk disk = min_enclosing_disk(ComplexSample(pts));
    REQUIRE(disk.radius == Approx(r).epsilon(1e-9));
    const CircleOnMeanResult check =
        circle_on_mean_check(ComplexSample(pts), 1e-7);
    CHECK(check.on_circle);
    CHECK(*check.report.satisfied);
  }
}
