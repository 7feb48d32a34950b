#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "eval.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace stump;

TEST_CASE("stratified split is deterministic, disjoint and exhaustive") {
  std::vector<int> labels;
  for (int c = 1; c <= 4; ++c) {
    for (int i = 0; i < 25 * c; ++i) labels.push_back(c);
  }
  const SplitResult a = stratified_split(labels, 0.2, 42);
  const SplitResult b = stratified_split(labels, 0.2, 42);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);

  const SplitResult c = stratified_split(labels, 0.2, 43);
  CHECK(a.test != c.test);

  std::set<std::size_t> seen;
  for (auto i : a.train) seen.insert(i);
  for (auto i : a.test) seen.insert(i);
  CHECK(seen.size() == labels.size());
  CHECK(a.train.size() + a.test.size() == labels.size());
  CHECK(std::is_sorted(a.train.begin(), a.train.end()));
  CHECK(std::is_sorted(a.test.begin(), a.test.end()));
}

TEST_CASE("stratified split reserves round(count * fraction) per class") {
  std::vector<int> labels;
  for (int i = 0; i < 10; ++i) labels.push_back(1);   // round(2.0) = 2
  for (int i = 0; i < 7; ++i) labels.push_back(2);    // round(1.4) = 1
  for (int i = 0; i < 3; ++i) labels.push_back(3);    // round(0.6) = 1
  const SplitResult s = stratified_split(labels, 0.2, 1);
  std::map<int, int> test_counts;
  for (auto i : s.test) ++test_counts[labels[i]];
  CHECK(test_counts[1] == 2);
  CHECK(test_counts[2] == 1);
  CHECK(test_counts[3] == 1);
  CHECK(s.singleton_classes.empty());
}

TEST_CASE("stratified split pins singleton classes to train") {
  const std::vector<int> labels = {1, 1, 1, 1, 2};
  const SplitResult s = stratified_split(labels, 0.5, 9);
  REQUIRE(s.singleton_classes == std::vector<int>{2});
  for (auto i : s.test) CHECK(labels[i] != 2);
}

TEST_CASE("stratified split always keeps one member in train") {
  // round(2 * 0.5) = 1 of 2 goes to test, one must stay
  const std::vector<int> labels = {5, 5};
  const SplitResult s = stratified_split(labels, 0.5, 3);
  CHECK(s.train.size() == 1);
  CHECK(s.test.size() == 1);
}

TEST_CASE("stratified split input validation") {
  CHECK_THROWS_AS(stratified_split(std::vector<int>{}, 0.2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(stratified_split(std::vector<int>{1}, 0.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(stratified_split(std::vector<int>{1}, 1.0, 1),
                  std::invalid_argument);
}

TEST_CASE("evaluate matches a worked example") {
  // truth (1,1,1,2) vs predictions (1,1,2,2):
  // class 1: tp 2 fp 0 fn 1 -> P 1, R 2/3, F 0.8
  // class 2: tp 1 fp 1 fn 0 -> P 1/2, R 1, F 2/3
  // weighted: P (3*1 + 1*0.5)/4 = 0.875, R (3*2/3 + 1)/4 = 0.75,
  //           F (3*0.8 + 2/3)/4 = 0.7666..
  const EvaluationReport r = evaluate({1, 1, 1, 2}, {1, 1, 2, 2});
  CHECK(r.n == 4);
  CHECK(r.accuracy == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(r.per_class[0].precision == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.per_class[0].recall ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(r.per_class[0].f1 == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(r.per_class[0].support == 3);
  CHECK(r.per_class[1].precision == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.per_class[1].recall == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.weighted_precision == doctest::Approx(0.875).epsilon(1e-14));
  CHECK(r.weighted_recall == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(r.weighted_f1 ==
        doctest::Approx(0.7666666666666667).epsilon(1e-14));
  // macro over the two classes present in truth
  CHECK(r.macro_precision == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(r.macro_recall ==
        doctest::Approx((2.0 / 3.0 + 1.0) / 2.0).epsilon(1e-14));
  // confusion counts
  CHECK(r.confusion[0][0] == 2);
  CHECK(r.confusion[0][1] == 1);
  CHECK(r.confusion[1][1] == 1);
  CHECK(r.confusion[1][0] == 0);
}

TEST_CASE("evaluate flags zero-division metrics") {
  // class 3 never predicted nor present; class 2 predicted but absent
  const EvaluationReport r = evaluate({1, 1}, {1, 2});
  CHECK(r.per_class[1].precision == 0.0);
  CHECK(r.per_class[1].recall == 0.0);   // no true members
  CHECK(r.per_class[1].zero_division);
  CHECK(r.per_class[2].zero_division);
  CHECK_FALSE(r.per_class[0].zero_division);
}

TEST_CASE("evaluate agrees with the counting oracle on random pairs") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.next_below(400);
    std::vector<int> y_true(n), y_pred(n);
    for (std::size_t i = 0; i < n; ++i) {
      y_true[i] = 1 + static_cast<int>(rng.next_below(8));
      // correlate predictions with truth so tp counts are non-trivial
      y_pred[i] = rng.next_bernoulli(0.6)
                      ? y_true[i]
                      : 1 + static_cast<int>(rng.next_below(8));
    }
    const EvaluationReport got = evaluate(y_true, y_pred);
    const oracle::MetricsReport want = oracle::metrics(y_true, y_pred);
    CHECK(std::abs(got.accuracy - want.accuracy) <= 1e-12);
    CHECK(std::abs(got.weighted_precision - want.weighted_precision) <= 1e-12);
    CHECK(std::abs(got.weighted_recall - want.weighted_recall) <= 1e-12);
    CHECK(std::abs(got.weighted_f1 - want.weighted_f1) <= 1e-12);
    CHECK(std::abs(got.macro_precision - want.macro_precision) <= 1e-12);
    CHECK(std::abs(got.macro_recall - want.macro_recall) <= 1e-12);
    CHECK(std::abs(got.macro_f1 - want.macro_f1) <= 1e-12);
    for (int c = 0; c < kNumClasses; ++c) {
      CHECK(std::abs(got.per_class[c].precision -
                     want.per_class[c].precision) <= 1e-12);
      CHECK(std::abs(got.per_class[c].recall - want.per_class[c].recall) <=
            1e-12);
      CHECK(std::abs(got.per_class[c].f1 - want.per_class[c].f1) <= 1e-12);
      CHECK(static_cast<double>(got.per_class[c].support) ==
            want.per_class[c].support);
    }
    // weighted recall is accuracy by construction
    CHECK(got.weighted_recall == doctest::Approx(got.accuracy).epsilon(1e-14));
  }
}

TEST_CASE("evaluate input validation") {
  CHECK_THROWS_AS(evaluate({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate({1, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate({0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate({1}, {9}), std::invalid_argument);
}
