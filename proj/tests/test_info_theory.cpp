/*
 * Copyright 2026 The fcfinfo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fcfinfo/fcf.hpp"
#include "fcfinfo/info_theory.hpp"

using namespace fcfinfo;

namespace {

std::vector<double> dirichlet(std::size_t k, std::mt19937_64& rng, double alpha = 1.0) {
  std::gamma_distribution<double> g(alpha, 1.0);
  std::vector<double> p(k);
  double sum = 0.0;
  for (double& v : p) sum += (v = g(rng));
  for (double& v : p) v /= sum;
  return p;
}

// MI as sum p(x) ln(p(x) / (P(x1) Pi(x2))), computed straight from the table.
double direct_mutual_information(const JointDistribution& j) {
  const auto m = marginals(j);
  const std::uint64_t x1_size = *j.factorization().size(0);
  double mi = 0.0;
  for (std::size_t y = 0; y < j.probs().size(); ++y) {
    const double p = j.probs()[y];
    if (p == 0.0) continue;
    mi += p * std::log(p / (m[0][y % x1_size] * m[1][y / x1_size]));
  }
  return mi;
}

JointDistribution fcf_joint(double a, double l, const Factorization& f) {
  TruncationOptions options;
  options.renormalize = true;
  return JointDistribution::from_fcf(fcf_distribution({a, l}, options), f);
}

}  // namespace

TEST_CASE("entropy examples") {
  const double det[] = {1.0};
  CHECK(shannon_entropy(det) == 0.0);
  const double half[] = {0.5, 0.5};
  CHECK(shannon_entropy(half) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  const double quarter[] = {0.25, 0.25, 0.25, 0.25};
  CHECK(shannon_entropy(quarter, LogBase::two) == doctest::Approx(2.0).epsilon(1e-15));
  const double with_zero[] = {0.5, 0.0, 0.5};
  CHECK(shannon_entropy(with_zero) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
}

TEST_CASE("entropy rejects bad input") {
  const double negative[] = {1.2, -0.2};
  CHECK_THROWS_AS(shannon_entropy(negative), std::invalid_argument);
  const double short_sum[] = {0.5, 0.49};
  CHECK_THROWS_AS(shannon_entropy(short_sum), std::invalid_argument);
  const double nan[] = {std::nan(""), 1.0};
  CHECK_THROWS_AS(shannon_entropy(nan), std::invalid_argument);
  const double nearly[] = {0.5, 0.5 - 1e-11};
  CHECK_NOTHROW(shannon_entropy(nearly));
}

TEST_CASE("log base handling") {
  CHECK(parse_log_base("2") == LogBase::two);
  CHECK(parse_log_base("e") == LogBase::e);
  CHECK(parse_log_base("10") == LogBase::ten);
  CHECK_THROWS_AS(parse_log_base("3"), std::invalid_argument);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto p = dirichlet(17, rng);
    const double nats = shannon_entropy(p, LogBase::e);
    CHECK(std::fabs(shannon_entropy(p, LogBase::two) - nats / std::numbers::ln2) <= 1e-14);
    CHECK(std::fabs(shannon_entropy(p, LogBase::ten) - nats / std::numbers::ln10) <= 1e-14);
    CHECK(nats <= std::log(17.0) + 1e-14);
    CHECK(nats >= 0.0);
  }
}

TEST_CASE("joint distribution validation and padding") {
  CHECK_THROWS_AS(JointDistribution({0.5, 0.4}, Factorization({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(JointDistribution({0.5, 0.6, -0.1}, Factorization({3, 1})), std::invalid_argument);
  CHECK_THROWS_AS(JointDistribution({0.2, 0.2, 0.2, 0.2, 0.2}, Factorization({2, 2})), IndexOutOfRange);

  const JointDistribution j({0.2, 0.2, 0.2, 0.2, 0.2}, Factorization::parity_split());
  CHECK(j.factorization() == Factorization({2, 3}));
  REQUIRE(j.probs().size() == 6);
  CHECK(j.probs()[5] == 0.0);
}

TEST_CASE("marginals of a product distribution") {
  // Flat order has x1 fastest: p(x1, x2) at index (x1-1) + 2 (x2-1).
  const std::vector<double> a{0.3, 0.7};
  const std::vector<double> b{0.5, 0.5};
  std::vector<double> flat;
  for (double pb : b) {
    for (double pa : a) flat.push_back(pa * pb);
  }
  const JointDistribution j(flat, Factorization({2, 2}));
  const auto m = marginals(j);
  CHECK(m[0][0] == doctest::Approx(0.3));
  CHECK(m[0][1] == doctest::Approx(0.7));
  CHECK(m[1][0] == doctest::Approx(0.5));
  CHECK(m[1][1] == doctest::Approx(0.5));

  const auto report = entropy_report(j);
  CHECK(std::fabs(report.mutual_information) <= 1e-12);
}

TEST_CASE("parity split of FCFs: odd levels empty at a = 0") {
  const auto j = fcf_joint(0.0, 2.0, Factorization::parity_split());
  const auto m = marginals(j);
  CHECK(m[0][0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m[0][1] == 0.0);
  CHECK(std::fabs(entropy_report(j).mutual_information) <= 1e-12);
}

TEST_CASE("parity split of the Poisson(1/2) distribution") {
  const auto j = fcf_joint(1.0, 1.0, Factorization::parity_split());
  const auto m = marginals(j);
  // e^{-1/2} cosh(1/2), e^{-1/2} sinh(1/2)
  CHECK(m[0][0] == doctest::Approx(0.68393972058572116080).epsilon(1e-12));
  CHECK(m[0][1] == doctest::Approx(0.31606027941427883920).epsilon(1e-12));

  // Pi(k) = P(2k-2) + P(2k-1)
  const auto p = j.probs();
  for (std::size_t k = 1; k <= m[1].size(); ++k) {
    CHECK(m[1][k - 1] == doctest::Approx(p[2 * k - 2] + p[2 * k - 1]));
  }
}

TEST_CASE("MI at a=2, l=2 against direct summation") {
  const auto j = fcf_joint(2.0, 2.0, Factorization::parity_split());
  const auto report = entropy_report(j);
  CHECK(report.mutual_information >= 0.0);
  CHECK(report.mutual_information == doctest::Approx(direct_mutual_information(j)).epsilon(1e-10));
  CHECK(report.inequality_slack == report.mutual_information);
  CHECK_FALSE(report.h_ab.has_value());
}

TEST_CASE("trivial first factor yields MI = 0 exactly") {
  std::mt19937_64 rng(4);
  const auto p = dirichlet(23, rng);
  const JointDistribution j(p, Factorization({1, 23}));
  CHECK(entropy_report(j).mutual_information == 0.0);
}

TEST_CASE("three-way reshape and strong subadditivity") {
  const auto j = fcf_joint(2.5, 1.6, Factorization::parse("2,2,inf"));
  const auto report = entropy_report(j);
  REQUIRE(report.h_parts.size() == 3);
  REQUIRE(report.h_ab.has_value());
  CHECK(report.inequality_slack >= -kSlackTolerance);
  CHECK(report.mutual_information >= -kSlackTolerance);

  // Pair marginals computed independently by contracting the flat table.
  const auto flat = j.probs();
  const std::uint64_t c = *j.factorization().size(2);
  std::vector<double> ab(4, 0.0), bc(2 * c, 0.0);
  for (std::size_t y = 0; y < flat.size(); ++y) {
    ab[y % 4] += flat[y];
    bc[y / 2] += flat[y];
  }
  CHECK(*report.h_ab == doctest::Approx(shannon_entropy(ab)).epsilon(1e-13));
  CHECK(*report.h_bc == doctest::Approx(shannon_entropy(bc)).epsilon(1e-13));
}

TEST_CASE("arity outside 2..3 is rejected") {
  const JointDistribution one({0.5, 0.5}, Factorization({2}));
  CHECK_THROWS_AS(entropy_report(one), UnsupportedArity);
  const JointDistribution four(std::vector<double>(16, 1.0 / 16), Factorization({2, 2, 2, 2}));
  CHECK_THROWS_AS(entropy_report(four), UnsupportedArity);
  CHECK(marginals(four).size() == 4);
}

TEST_CASE("property: subadditivity and MI identity on random tables") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint64_t> size(1, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t x1 = size(rng), x2 = size(rng);
    const auto p = dirichlet(x1 * x2, rng, trial % 2 == 0 ? 1.0 : 0.1);
    const JointDistribution j(p, Factorization({x1, x2}));
    const auto report = entropy_report(j);
    CHECK(report.inequality_slack >= -kSlackTolerance);
    CHECK(std::fabs(report.mutual_information - direct_mutual_information(j)) <= 1e-10);
    for (const auto& m : marginals(j)) {
      double s = 0.0;
      for (double v : m) s += v;
      CHECK(std::fabs(s - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("property: strong subadditivity on random three-way tables") {
  std::mt19937_64 rng(78);
  std::uniform_int_distribution<std::uint64_t> size(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const Factorization f({size(rng), size(rng), size(rng)});
    const auto p = dirichlet(*f.capacity(), rng, 0.3);
    const auto report = entropy_report(JointDistribution(p, f));
    CHECK(report.inequality_slack >= -kSlackTolerance);
  }
}
