#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "model_io.hpp"
#include "rng.hpp"
#include "test_helpers.hpp"

using namespace stump;

namespace {

SparseVector sparse_of(const std::vector<double>& dense) {
  SparseVector v;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0.0) v.push_back({static_cast<std::uint32_t>(j), dense[j]});
  }
  return v;
}

// Three well-separated classes on four features, with some noise weights so
// the serialised doubles are not round numbers.
Dataset fixture_dataset() {
  Dataset data;
  data.dim = 4;
  Rng rng(7);
  for (int rep = 0; rep < 8; ++rep) {
    for (int c = 0; c < 3; ++c) {
      std::vector<double> row(4, 0.0);
      row[c] = 1.0 + rng.next_unit() * 0.25;
      row[3] = rng.next_unit() * 0.1;
      data.rows.push_back(sparse_of(row));
      data.labels.push_back(c + 2);  // classes 2, 3, 4
    }
  }
  return data;
}

std::vector<SparseVector> probe_vectors() {
  return {
      sparse_of({1.2, 0.0, 0.0, 0.05}),
      sparse_of({0.0, 0.9, 0.1, 0.0}),
      sparse_of({0.0, 0.0, 1.4, 0.2}),
      sparse_of({0.3, 0.3, 0.3, 0.3}),
      {},  // empty document
  };
}

std::vector<TrainedModel> fixture_models() {
  const Dataset data = fixture_dataset();
  std::vector<TrainedModel> models;
  models.push_back(train_naive_bayes(data, {.alpha = 0.5}));
  models.push_back(train_logistic(data, {.learning_rate = 0.1,
                                         .l2 = 1e-4,
                                         .epochs = 50}));
  models.push_back(train_svm(data, {.lambda = 1e-3, .epochs = 5, .seed = 11}));
  models.push_back(train_forest(
      data, {.n_trees = 8, .max_depth = 6, .min_leaf = 1, .mtry = 0,
             .seed = 3, .n_threads = 1}));
  return models;
}

}  // namespace

TEST_CASE("model JSON round-trip is lossless for every kind") {
  for (const TrainedModel& model : fixture_models()) {
    CAPTURE(model_kind(model));
    const std::string json_one = model_to_json(model);
    CHECK(json_one.back() == '\n');

    const TrainedModel reloaded = model_from_json(json_one);
    CHECK(model_kind(reloaded) == model_kind(model));
    CHECK(model_dim(reloaded) == model_dim(model));
    CHECK(model_classes(reloaded) == model_classes(model));

    // serialisation is shortest-round-trip, so a second dump is byte-equal
    CHECK(model_to_json(reloaded) == json_one);

    // and the reloaded model scores bit-identically
    for (const SparseVector& x : probe_vectors()) {
      const auto a = model_scores(model, x);
      const auto b = model_scores(reloaded, x);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
      CHECK(model_predict(model, x) == model_predict(reloaded, x));
    }
  }
}

TEST_CASE("save and load through a file") {
  testutil::TempDir dir("model_io");
  for (const TrainedModel& model : fixture_models()) {
    CAPTURE(model_kind(model));
    const std::string path = dir.file(model_kind(model) + ".json");
    save_model(model, path);
    const TrainedModel reloaded = load_model(path);
    CHECK(model_to_json(reloaded) == model_to_json(model));

    // saving the reloaded model produces a byte-identical file
    const std::string again = dir.file(model_kind(model) + "_resaved.json");
    save_model(reloaded, again);
    CHECK(testutil::read_file(again) == testutil::read_file(path));
  }
}

TEST_CASE("load_model_expect enforces the stored kind") {
  testutil::TempDir dir("model_expect");
  const Dataset data = fixture_dataset();
  const std::string path = dir.file("nb.json");
  save_model(train_naive_bayes(data), path);

  CHECK(model_kind(load_model_expect(path, "naive_bayes")) == "naive_bayes");
  CHECK_THROWS_WITH_AS(load_model_expect(path, "forest"),
                       doctest::Contains("kind mismatch"), ParseError);
}

TEST_CASE("model loading rejects malformed input") {
  CHECK_THROWS_AS(load_model("/nonexistent/dir/model.json"), IoError);
  CHECK_THROWS_WITH_AS(model_from_json("{]"),
                       doctest::Contains("invalid JSON"), ParseError);
  CHECK_THROWS_WITH_AS(model_from_json("[1,2]"),
                       doctest::Contains("not a JSON object"), ParseError);
  CHECK_THROWS_WITH_AS(model_from_json("{}"),
                       doctest::Contains("missing field"), ParseError);

  // take a valid document and break one thing at a time
  const Dataset data = fixture_dataset();
  const std::string good = model_to_json(train_naive_bayes(data));

  auto patched = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    s.replace(pos, from.size(), to);
    return s;
  };

  CHECK_THROWS_WITH_AS(
      model_from_json(patched("\"format_version\":1", "\"format_version\":2")),
      doctest::Contains("format_version"), ParseError);
  CHECK_THROWS_WITH_AS(
      model_from_json(patched("\"kind\":\"naive_bayes\"", "\"kind\":\"nb\"")),
      doctest::Contains("unknown kind"), ParseError);
  CHECK_THROWS_WITH_AS(
      model_from_json(patched("\"classes\":[2,3,4]", "\"classes\":[2,4,3]")),
      doctest::Contains("ascending"), ParseError);
  CHECK_THROWS_WITH_AS(
      model_from_json(patched("\"classes\":[2,3,4]", "\"classes\":[]")),
      doctest::Contains("empty class list"), ParseError);
  CHECK_THROWS_WITH_AS(
      model_from_json(patched("\"dim\":4", "\"dim\":5")),
      doctest::Contains("log_likelihood"), ParseError);
  CHECK_THROWS_WITH_AS(
      model_from_json(patched("\"alpha\":", "\"alpha_x\":")),
      doctest::Contains("params missing"), ParseError);
}

TEST_CASE("load_model reports the offending path") {
  testutil::TempDir dir("model_bad");
  const std::string path = dir.file("broken.json");
  testutil::write_file(path, "not json at all");
  CHECK_THROWS_WITH_AS(load_model(path), doctest::Contains("broken.json"),
                       ParseError);
}
