#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "forest.hpp"
#include "linear.hpp"
#include "naive_bayes.hpp"

namespace stump {

inline constexpr std::uint32_t kModelFormatVersion = 1;

// Kind strings: "naive_bayes", "logistic", "svm_ovr", "forest".
using TrainedModel = std::variant<NaiveBayesModel, LinearModel, ForestModel>;

std::string model_kind(const TrainedModel& model);
std::size_t model_dim(const TrainedModel& model);
const std::vector<int>& model_classes(const TrainedModel& model);
std::vector<double> model_scores(const TrainedModel& model,
                                 const SparseVector& x);
int model_predict(const TrainedModel& model, const SparseVector& x);

// JSON envelope {"format_version", "kind", "dim", "classes", "params"};
// params is kind-specific.  Doubles are written shortest-round-trip, so a
// reloaded model scores bit-identically.
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(std::string_view json_text);

void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);
// As load_model but fails with a kind-mismatch error unless the stored kind
// equals `expected_kind`.
TrainedModel load_model_expect(const std::string& path,
                               std::string_view expected_kind);

}  // namespace stump
