#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "test_util.hpp"
#include "varbounds/complex_stats.hpp"

using namespace varbounds;
using doctest::Approx;

namespace {

const std::vector<Complex> kTriple = {{-0.5, std::sqrt(3.0) / 2.0},
                                      {0.0, 0.0},
                                      {0.5, std::sqrt(3.0) / 2.0}};

ComplexSample triple() { return ComplexSample(kTriple); }

}  // namespace

TEST_CASE("dispersion of the equilateral triple") {
  const DispersionSummary d = dispersion(triple());
  CHECK(std::fabs(d.mean.real()) < 1e-15);
  CHECK(d.mean.imag() == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(std::fabs(d.sz2 - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(d.s2) < 1e-12);
  CHECK(std::fabs(d.sigma_z2 - 1.0 / 6.0) < 1e-12);
}

TEST_CASE("dispersion of a constant sample is zero") {
  const Complex c{3.5, -2.25};
  const DispersionSummary d = dispersion(ComplexSample({c, c, c}));
  CHECK(d.mean == c);
  CHECK(d.sz2 == 0.0);
  CHECK(std::abs(d.s2) == 0.0);
  CHECK(d.sigma_z2 == 0.0);
}

TEST_CASE("dispersion of a real pair") {
  const DispersionSummary d = dispersion(ComplexSample({{0, 0}, {2, 0}}));
  CHECK(d.mean == Complex{1.0, 0.0});
  CHECK(d.sz2 == Approx(1.0));
  CHECK(d.s2.real() == Approx(1.0));
  CHECK(d.s2.imag() == 0.0);
  CHECK(d.sigma_z2 == Approx(1.0));
}

TEST_CASE("sample construction rejects bad input") {
  CHECK_THROWS_WITH_AS(ComplexSample({}), "empty sample", std::invalid_argument);
  CHECK_THROWS_AS(ComplexSample(std::vector<Complex>{{std::nan(""), 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ComplexSample(std::vector<Complex>{{0.0, INFINITY}}), std::invalid_argument);
}

TEST_CASE("pooled variance on the worked pairs") {
  CHECK(pooled_variance(ComplexSample(std::vector<Complex>{{0, 0}}), ComplexSample(std::vector<Complex>{{2, 0}})) ==
        Approx(1.0));
  CHECK(pooled_variance(ComplexSample({{0, 0}, {2, 0}}),
                        ComplexSample({{10, 0}, {14, 0}})) == Approx(32.75));
  const Complex z{1.25, -0.5};
  CHECK(pooled_variance(ComplexSample({z}), ComplexSample({z})) ==
        Approx(0.0).scale(1.0));
}

TEST_CASE("pooled variance equals the concatenated variance") {
  auto gen = testutil::rng(101);
  std::uniform_int_distribution<std::size_t> size(1, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testutil::random_cloud(gen, size(gen));
    const auto b = testutil::random_cloud(gen, size(gen));
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    const double pooled = pooled_variance(ComplexSample(a), ComplexSample(b));
    const double direct = dispersion(ComplexSample(both)).sz2;
    CHECK(std::fabs(pooled - direct) <= 1e-12 * std::max({pooled, direct, 1.0}));
  }
}

TEST_CASE("subset mean bound on the worked examples") {
  SUBCASE("singleton at the origin point, equality") {
    const std::size_t idx[] = {1};  // the 0 point
    const BoundReport r = subset_mean_bound(triple(), idx);
    CHECK(*r.find_value("lhs") == Approx(1.0 / 3.0));
    CHECK(*r.find_value("rhs") == Approx(1.0 / 3.0));
    CHECK(*r.satisfied);
  }
  SUBCASE("full subset gives zero on both sides") {
    const std::size_t idx[] = {0, 1, 2};
    const BoundReport r = subset_mean_bound(triple(), idx);
    CHECK(*r.find_value("lhs") == 0.0);
    CHECK(*r.find_value("rhs") == 0.0);
    CHECK(*r.satisfied);
  }
  SUBCASE("two-point Samuelson equality") {
    const std::size_t idx[] = {0};
    const BoundReport r =
        subset_mean_bound(ComplexSample({{0, 0}, {2, 0}}), idx);
    CHECK(*r.find_value("lhs") == Approx(1.0));
    CHECK(*r.find_value("rhs") == Approx(1.0));
    CHECK(*r.satisfied);
  }
}

TEST_CASE("subset mean bound rejects bad subsets") {
  const std::size_t out_of_range[] = {7};
  CHECK_THROWS_AS(subset_mean_bound(triple(), out_of_range),
                  std::invalid_argument);
  const std::size_t duplicate[] = {1, 1};
  CHECK_THROWS_AS(subset_mean_bound(triple(), duplicate), std::invalid_argument);
  CHECK_THROWS_AS(subset_mean_bound(triple(), {}), std::invalid_argument);
}

TEST_CASE("subset mean bound holds for every subset, exhaustively") {
  auto gen = testutil::rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 10);
    const std::size_t n = size(gen);
    const ComplexSample sample(testutil::random_cloud(gen, n));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      const BoundReport r = subset_mean_bound(sample, idx);
      const double lhs = *r.find_value("lhs");
      const double rhs = *r.find_value("rhs");
      REQUIRE(lhs <= rhs + 1e-12 * std::max({lhs, rhs, 1.0}));
    }
  }
}

TEST_CASE("Samuelson specialization holds for every point") {
  auto gen = testutil::rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 40);
    const std::size_t n = size(gen);
    const ComplexSample sample(testutil::random_cloud(gen, n));
    const DispersionSummary d = dispersion(sample);
    for (std::size_t j = 0; j < n; ++j) {
      const double dev2 = std::norm(sample[j] - d.mean);
      REQUIRE(dev2 / static_cast<double>(n - 1) <=
              d.sigma_z2 + 1e-12 * std::max(d.sigma_z2, 1.0));
    }
  }
}

TEST_CASE("pairwise gap bound on the worked examples") {
  SUBCASE("equilateral triple saturates") {
    const BoundReport r = pairwise_gap_bound(triple());
    CHECK(*r.find_value("lower") == Approx(1.0 / 6.0));
    CHECK(*r.find_value("sigma_z2") == Approx(1.0 / 6.0));
    CHECK(*r.find_value("max_gap") == Approx(1.0));
    CHECK(*r.satisfied);
  }
  SUBCASE("two points saturate") {
    const BoundReport r = pairwise_gap_bound(ComplexSample({{0, 0}, {2, 0}}));
    CHECK(*r.find_value("lower") == Approx(1.0));
    CHECK(*r.find_value("sigma_z2") == Approx(1.0));
    CHECK(*r.satisfied);
  }
  SUBCASE("right-angle triple") {
    const BoundReport r =
        pairwise_gap_bound(ComplexSample({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(*r.find_value("lower") == Approx(1.0 / 3.0));
    CHECK(*r.find_value("sigma_z2") == Approx(1.0 / 3.0));
    CHECK(*r.satisfied);
  }
  CHECK_THROWS_AS(pairwise_gap_bound(ComplexSample(std::vector<Complex>{{1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("quarter-gap checks separate sigma_z2 from sz2") {
  const auto reports = gap_upper_checks(triple());
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name == "sigma-quarter-gap-upper");
  CHECK(*reports[0].satisfied);
  CHECK(*reports[0].find_value("sigma_z2") == Approx(1.0 / 6.0));
  CHECK(*reports[0].find_value("upper") == Approx(0.25));
  CHECK(reports[1].name == "sz2-quarter-gap-check");
  CHECK_FALSE(*reports[1].satisfied);  // sz2 = 1/3 > 1/4
  CHECK(*reports[1].find_value("sz2") == Approx(1.0 / 3.0));
}

TEST_CASE("collinearity on the worked examples") {
  CHECK(collinearity_test(ComplexSample({{0, 0}, {1, 0}, {2, 0}})).collinear);
  CHECK(collinearity_test(ComplexSample({{0, 0}, {0, 1}, {0, 2}})).collinear);
  CHECK_FALSE(collinearity_test(triple()).collinear);
  CHECK(collinearity_test(ComplexSample(std::vector<Complex>{{3, 7}})).collinear);
  CHECK(collinearity_test(ComplexSample({{3, 7}, {-2, 5}})).collinear);
  CHECK_THROWS_AS(collinearity_test(triple(), -1.0), std::invalid_argument);
}

TEST_CASE("collinearity is exact at zero tolerance on synthetic lines") {
  // Small integer data and power-of-two sizes keep every intermediate
  // quantity exactly representable, so no round-off reaches the criterion.
  auto gen = testutil::rng(404);
  std::uniform_int_distribution<int> small(-8, 8);
  const std::size_t sizes[] = {2, 4, 8};
  for (int trial = 0; trial < 300; ++trial) {
    const Complex a{double(small(gen)), double(small(gen))};
    Complex dir{double(small(gen)), double(small(gen))};
    if (dir == Complex{0, 0}) dir = {1, 2};
    std::vector<Complex> pts;
    for (std::size_t k = sizes[trial % 3]; k-- > 0;)
      pts.push_back(a + double(small(gen)) * dir);
    CHECK(collinearity_test(ComplexSample(pts), 0.0).collinear);
  }
}

TEST_CASE("moduli inequalities among the dispersion statistics") {
  auto gen = testutil::rng(505);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 60);
    const DispersionSummary d =
        dispersion(ComplexSample(testutil::random_cloud(gen, size(gen))));
    const double abs_s2 = std::abs(d.s2);
    CHECK(abs_s2 <= d.sz2 + 1e-12 * std::max(d.sz2, 1.0));
    CHECK(d.sigma_z2 <= d.sz2 + 1e-12 * std::max(d.sz2, 1.0));
    CHECK(d.sigma_z2 >= abs_s2 - 1e-12 * std::max(abs_s2, 1.0));
  }
}

TEST_CASE("translation and rotation invariance") {
  auto gen = testutil::rng(606);
  std::uniform_real_distribution<double> angle(0.0, 6.28318530717958648);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 50);
    const auto pts = testutil::random_cloud(gen, size(gen));
    const DispersionSummary base = dispersion(ComplexSample(pts));

    const Complex shift{3.25, -11.5};
    std::vector<Complex> shifted;
    for (Complex z : pts) shifted.push_back(z + shift);
    const DispersionSummary ds = dispersion(ComplexSample(shifted));
    CHECK(std::fabs(ds.sz2 - base.sz2) <= 1e-10 * std::max(base.sz2, 1.0));
    CHECK(std::abs(ds.s2 - base.s2) <= 1e-10 * std::max(std::abs(base.s2), 1.0));
    CHECK(std::fabs(ds.sigma_z2 - base.sigma_z2) <=
          1e-10 * std::max(base.sigma_z2, 1.0));

    const Complex rot = std::polar(1.0, angle(gen));
    std::vector<Complex> rotated;
    for (Complex z : pts) rotated.push_back(rot * z);
    const DispersionSummary dr = dispersion(ComplexSample(rotated));
    CHECK(std::fabs(dr.sz2 - base.sz2) <= 1e-10 * std::max(base.sz2, 1.0));
    CHECK(std::fabs(std::abs(dr.s2) - std::abs(base.s2)) <=
          1e-10 * std::max(std::abs(base.s2), 1.0));
  }
}
