#include "evokit/io.hpp"

#include <fstream>
#include <sstream>

#include "evokit/errors.hpp"

namespace evokit {

Json algebra_to_json(const EvolutionAlgebra& x) {
  Json j;
  j["field"] = x.field.to_string();
  j["dim"] = x.dim;
  Json rows = Json::array();
  for (const auto& row : x.matrix) {
    Json cells = Json::array();
    for (const Scalar& s : row) cells.push_back(s.to_string());
    rows.push_back(std::move(cells));
  }
  j["matrix"] = std::move(rows);
  j["labels"] = x.labels;
  return j;
}

EvolutionAlgebra algebra_from_json(
    const Json& j, const std::optional<FieldSpec>& field_override) {
  try {
    FieldSpec field = field_override
                          ? *field_override
                          : FieldSpec::parse(j.at("field").get<std::string>());
    int dim = j.at("dim").get<int>();
    const Json& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
      throw DomainError("matrix row count does not match dim");
    }
    std::vector<std::vector<Scalar>> m;
    m.reserve(rows.size());
    for (const Json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw DomainError("matrix column count does not match dim");
      }
      std::vector<Scalar> cells;
      cells.reserve(row.size());
      for (const Json& cell : row) {
        cells.push_back(Scalar::parse(cell.get<std::string>(), field));
      }
      m.push_back(std::move(cells));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
    return EvolutionAlgebra::create(field, std::move(m), std::move(labels));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("bad algebra file: ") + e.what());
  }
}

Json group_to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.to_one_based());
  j["generators"] = std::move(gens);
  return j;
}

PermGroup group_from_json(const Json& j) {
  try {
    int degree = j.at("degree").get<int>();
    if (degree < 0) throw DomainError("negative group degree");
    std::vector<Perm> gens;
    for (const Json& image : j.at("generators")) {
      std::vector<int> img = image.get<std::vector<int>>();
      if (static_cast<int>(img.size()) != degree) {
        throw DomainError("generator length does not match degree");
      }
      gens.push_back(Perm::from_one_based(img));
    }
    return PermGroup(degree, std::move(gens));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("bad group file: ") + e.what());
  }
}

Json graph_to_json(const LabeledGraph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) {
    edges.push_back(Json::array({a + 1, b + 1}));
  }
  j["edges"] = std::move(edges);
  Json tagged = Json::array();
  for (int v : g.tagged) tagged.push_back(v + 1);
  j["V"] = std::move(tagged);
  return j;
}

LabeledGraph graph_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j.at("edges")) {
      std::vector<int> pair = e.get<std::vector<int>>();
      if (pair.size() != 2) throw DomainError("edge must have two endpoints");
      edges.push_back({pair[0] - 1, pair[1] - 1});
    }
    std::vector<int> tagged;
    for (const Json& v : j.at("V")) {
      tagged.push_back(v.get<int>() - 1);
    }
    return LabeledGraph::create(n, std::move(edges), std::move(tagged));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("bad graph file: ") + e.what());
  }
}

Json aut_report(const AutomorphismGroup& aut, std::uint64_t element_list_cap) {
  Json j;
  j["order"] = aut.elements.size();
  j["kernel_order"] = aut.kernel.size();
  j["image_order"] = aut.image.order();
  j["faithful"] = aut.faithful;
  j["full"] = aut.full;
  Json gens = Json::array();
  for (const Perm& p : aut.image.generators()) {
    gens.push_back(p.to_one_based());
  }
  j["image_generators"] = std::move(gens);
  if (aut.elements.size() <= element_list_cap) {
    Json elements = Json::array();
    for (const WeightedAutomorphism& a : aut.elements) {
      Json e;
      e["sigma"] = a.sigma.to_one_based();
      Json lambda = Json::array();
      for (const Scalar& l : a.lambda) lambda.push_back(l.to_string());
      e["lambda"] = std::move(lambda);
      elements.push_back(std::move(e));
    }
    j["elements"] = std::move(elements);
  }
  return j;
}

Json realization_report_to_json(const RealizationReport& r) {
  Json j;
  j["graph_aut_order"] = r.graph_aut_order;
  j["algebra_aut_order"] = r.algebra_aut_order;
  j["isomorphic"] = r.isomorphic;
  j["representations_equivalent"] = r.representations_equivalent;
  j["tagged_invariant"] = r.tagged_invariant;
  j["idempotent_count"] = r.idempotent_count;
  j["success"] = r.success;
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError("cannot parse " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  out << content;
  if (!out) throw DomainError("write failed: " + path);
}

}  // namespace evokit
