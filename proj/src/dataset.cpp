#include "dataset.hpp"

#include <stdexcept>

namespace stump {

Dataset build_dataset(const std::vector<std::string>& documents,
                      const std::vector<int>& labels, const TfidfModel& model) {
  if (documents.size() != labels.size()) {
    throw std::invalid_argument("build_dataset: documents/labels size mismatch");
  }
  Dataset data;
  data.dim = model.vocab_size();
  data.rows.reserve(documents.size());
  for (const std::string& doc : documents) {
    data.rows.push_back(model.transform(doc));
  }
  data.labels = labels;
  return data;
}

Dataset build_dataset(const Corpus& corpus, const TfidfModel& model) {
  return build_dataset(corpus_texts(corpus), corpus_labels(corpus), model);
}

Dataset subset(const Dataset& data, const std::vector<std::size_t>& indices) {
  Dataset out;
  out.dim = data.dim;
  out.rows.reserve(indices.size());
  out.labels.reserve(indices.size());
  for (std::size_t i : indices) {
    out.rows.push_back(data.rows.at(i));
    out.labels.push_back(data.labels.at(i));
  }
  return out;
}

std::vector<std::string> corpus_texts(const Corpus& corpus) {
  std::vector<std::string> texts;
  texts.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    texts.push_back(corpus[i].text);
  }
  return texts;
}

std::vector<int> corpus_labels(const Corpus& corpus) {
  std::vector<int> labels;
  labels.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    labels.push_back(class_code(corpus[i].label));
  }
  return labels;
}

}  // namespace stump
