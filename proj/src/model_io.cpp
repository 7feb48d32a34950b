#include "model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace stump {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json double_matrix(const std::vector<std::vector<double>>& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

std::vector<std::vector<double>> parse_double_matrix(const ordered_json& j,
                                                     std::size_t rows,
                                                     std::size_t cols,
                                                     const char* what) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(std::string("model: ") + what + ": wrong row count");
  }
  std::vector<std::vector<double>> out;
  out.reserve(rows);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(std::string("model: ") + what + ": wrong row width");
    }
    std::vector<double> r;
    r.reserve(cols);
    for (const auto& v : row) {
      if (!v.is_number()) {
        throw ParseError(std::string("model: ") + what + ": non-numeric entry");
      }
      r.push_back(v.get<double>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<double> parse_double_vector(const ordered_json& j, std::size_t len,
                                        const char* what) {
  if (!j.is_array() || j.size() != len) {
    throw ParseError(std::string("model: ") + what + ": wrong length");
  }
  std::vector<double> out;
  out.reserve(len);
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw ParseError(std::string("model: ") + what + ": non-numeric entry");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

ordered_json forest_params(const ForestModel& m) {
  ordered_json params;
  params["n_trees"] = m.n_trees;
  params["max_depth"] = m.max_depth;
  params["min_leaf"] = m.min_leaf;
  params["mtry"] = m.mtry;
  params["seed"] = m.seed;
  ordered_json trees = ordered_json::array();
  for (const Tree& tree : m.trees) {
    ordered_json nodes = ordered_json::array();
    for (const TreeNode& node : tree.nodes) {
      ordered_json n;
      if (node.feature < 0) {
        n["counts"] = node.counts;
      } else {
        n["feature"] = node.feature;
        n["threshold"] = node.threshold;
        n["left"] = node.left;
        n["right"] = node.right;
      }
      nodes.push_back(std::move(n));
    }
    ordered_json t;
    t["nodes"] = std::move(nodes);
    trees.push_back(std::move(t));
  }
  params["trees"] = std::move(trees);
  return params;
}

ForestModel parse_forest(const ordered_json& params, std::size_t dim,
                         std::vector<int> classes) {
  for (const char* key : {"n_trees", "max_depth", "min_leaf", "mtry", "seed",
                          "trees"}) {
    if (!params.contains(key)) {
      throw ParseError(std::string("model: forest params missing ") + key);
    }
  }
  ForestModel m;
  m.dim = dim;
  m.classes = std::move(classes);
  m.n_trees = params["n_trees"].get<std::uint32_t>();
  m.max_depth = params["max_depth"].get<std::uint32_t>();
  m.min_leaf = params["min_leaf"].get<std::uint32_t>();
  m.mtry = params["mtry"].get<std::uint32_t>();
  m.seed = params["seed"].get<std::uint64_t>();
  const auto& trees = params["trees"];
  if (!trees.is_array() || trees.size() != m.n_trees) {
    throw ParseError("model: forest tree count mismatch");
  }
  m.trees.reserve(trees.size());
  for (const auto& t : trees) {
    if (!t.is_object() || !t.contains("nodes") || !t["nodes"].is_array() ||
        t["nodes"].empty()) {
      throw ParseError("model: malformed tree");
    }
    Tree tree;
    const auto& nodes = t["nodes"];
    tree.nodes.reserve(nodes.size());
    for (const auto& nj : nodes) {
      TreeNode node;
      if (nj.contains("counts")) {
        if (!nj["counts"].is_array() ||
            nj["counts"].size() != m.classes.size()) {
          throw ParseError("model: leaf histogram has wrong width");
        }
        node.counts = nj["counts"].get<std::vector<std::uint32_t>>();
      } else {
        for (const char* key : {"feature", "threshold", "left", "right"}) {
          if (!nj.contains(key)) {
            throw ParseError("model: internal node missing field");
          }
        }
        node.feature = nj["feature"].get<std::int32_t>();
        node.threshold = nj["threshold"].get<double>();
        node.left = nj["left"].get<std::int32_t>();
        node.right = nj["right"].get<std::int32_t>();
        const auto limit = static_cast<std::int64_t>(nodes.size());
        if (node.feature < 0 ||
            static_cast<std::size_t>(node.feature) >= dim ||
            node.left < 0 || node.left >= limit || node.right < 0 ||
            node.right >= limit) {
          throw ParseError("model: tree node out of range");
        }
      }
      tree.nodes.push_back(std::move(node));
    }
    m.trees.push_back(std::move(tree));
  }
  return m;
}

}  // namespace

std::string model_kind(const TrainedModel& model) {
  if (std::holds_alternative<NaiveBayesModel>(model)) return "naive_bayes";
  if (std::holds_alternative<ForestModel>(model)) return "forest";
  return std::get<LinearModel>(model).kind;
}

std::size_t model_dim(const TrainedModel& model) {
  if (const auto* nb = std::get_if<NaiveBayesModel>(&model)) return nb->dim;
  if (const auto* fo = std::get_if<ForestModel>(&model)) return fo->dim;
  return std::get<LinearModel>(model).dim();
}

const std::vector<int>& model_classes(const TrainedModel& model) {
  if (const auto* nb = std::get_if<NaiveBayesModel>(&model)) {
    return nb->classes;
  }
  if (const auto* fo = std::get_if<ForestModel>(&model)) return fo->classes;
  return std::get<LinearModel>(model).classes;
}

std::vector<double> model_scores(const TrainedModel& model,
                                 const SparseVector& x) {
  return std::visit([&x](const auto& m) { return m.scores(x); }, model);
}

int model_predict(const TrainedModel& model, const SparseVector& x) {
  return std::visit([&x](const auto& m) { return m.predict(x); }, model);
}

std::string model_to_json(const TrainedModel& model) {
  ordered_json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["kind"] = model_kind(model);
  doc["dim"] = model_dim(model);
  doc["classes"] = model_classes(model);
  ordered_json params;
  if (const auto* nb = std::get_if<NaiveBayesModel>(&model)) {
    params["alpha"] = nb->alpha;
    params["log_prior"] = nb->log_prior;
    params["log_likelihood"] = double_matrix(nb->log_likelihood);
  } else if (const auto* lin = std::get_if<LinearModel>(&model)) {
    params["weights"] = double_matrix(lin->weights);
    params["bias"] = lin->bias;
  } else {
    params = forest_params(std::get<ForestModel>(model));
  }
  doc["params"] = std::move(params);
  return doc.dump() + "\n";
}

TrainedModel model_from_json(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("model: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model: not a JSON object");
  for (const char* key : {"format_version", "kind", "dim", "classes",
                          "params"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("model: missing field ") + key);
    }
  }
  if (!doc["format_version"].is_number_unsigned() ||
      doc["format_version"].get<std::uint32_t>() != kModelFormatVersion) {
    throw ParseError("model: unsupported format_version");
  }
  if (!doc["kind"].is_string() || !doc["dim"].is_number_unsigned() ||
      !doc["classes"].is_array() || !doc["params"].is_object()) {
    throw ParseError("model: malformed envelope");
  }
  const std::string kind = doc["kind"].get<std::string>();
  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<int> classes;
  for (const auto& c : doc["classes"]) {
    if (!c.is_number_integer()) throw ParseError("model: non-integer class");
    classes.push_back(c.get<int>());
    if (classes.size() >= 2 && classes[classes.size() - 2] >= classes.back()) {
      throw ParseError("model: classes must be strictly ascending");
    }
  }
  if (classes.empty()) throw ParseError("model: empty class list");
  const auto& params = doc["params"];

  if (kind == "naive_bayes") {
    for (const char* key : {"alpha", "log_prior", "log_likelihood"}) {
      if (!params.contains(key)) {
        throw ParseError(std::string("model: naive_bayes params missing ") +
                         key);
      }
    }
    NaiveBayesModel m;
    m.dim = dim;
    m.classes = classes;
    m.alpha = params["alpha"].get<double>();
    m.log_prior = parse_double_vector(params["log_prior"], classes.size(),
                                      "log_prior");
    m.log_likelihood = parse_double_matrix(params["log_likelihood"],
                                           classes.size(), dim,
                                           "log_likelihood");
    return m;
  }
  if (kind == "logistic" || kind == "svm_ovr") {
    for (const char* key : {"weights", "bias"}) {
      if (!params.contains(key)) {
        throw ParseError(std::string("model: linear params missing ") + key);
      }
    }
    LinearModel m;
    m.kind = kind;
    m.classes = classes;
    m.weights = parse_double_matrix(params["weights"], classes.size(), dim,
                                    "weights");
    m.bias = parse_double_vector(params["bias"], classes.size(), "bias");
    return m;
  }
  if (kind == "forest") {
    return parse_forest(params, dim, std::move(classes));
  }
  throw ParseError("model: unknown kind \"" + kind + "\"");
}

void save_model(const TrainedModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << model_to_json(model);
  if (!out.flush()) throw IoError("failed to write: " + path);
}

TrainedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return model_from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

TrainedModel load_model_expect(const std::string& path,
                               std::string_view expected_kind) {
  TrainedModel model = load_model(path);
  const std::string kind = model_kind(model);
  if (kind != expected_kind) {
    throw ParseError(path + ": model kind mismatch: expected \"" +
                     std::string(expected_kind) + "\", found \"" + kind + "\"");
  }
  return model;
}

}  // namespace stump
