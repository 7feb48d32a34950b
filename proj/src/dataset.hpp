#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "features.hpp"

namespace stump {

// Vectorised corpus: one sparse row and one class code (1..8) per tweet.
struct Dataset {
  std::vector<SparseVector> rows;
  std::vector<int> labels;
  std::size_t dim = 0;  // feature-space width (vectoriser vocabulary size)

  std::size_t size() const { return rows.size(); }
};

// Transform `documents` with `model`; texts are used verbatim, so clean them
// first when they may still be raw tweets.
Dataset build_dataset(const std::vector<std::string>& documents,
                      const std::vector<int>& labels, const TfidfModel& model);

Dataset build_dataset(const Corpus& corpus, const TfidfModel& model);

// Rows of `data` at `indices`, in the given order.
Dataset subset(const Dataset& data, const std::vector<std::size_t>& indices);

std::vector<std::string> corpus_texts(const Corpus& corpus);
std::vector<int> corpus_labels(const Corpus& corpus);

}  // namespace stump
