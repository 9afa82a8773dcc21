#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "evokit/errors.hpp"
#include "evokit/fixtures.hpp"
#include "evokit/io.hpp"
#include "evokit/oracle.hpp"

namespace {

using evokit::Json;

void emit(const Json& report, const std::string& out_path) {
  std::string text = evokit::dump_canonical(report);
  std::cout << text;
  if (!out_path.empty()) evokit::write_text_file(out_path, text);
}

std::optional<evokit::FieldSpec> parse_field_flag(const std::string& field,
                                                  std::uint64_t max_modulus) {
  if (field.empty()) return std::nullopt;
  return evokit::FieldSpec::parse(field, max_modulus);
}

Json element_list(const std::vector<evokit::WeightedAutomorphism>& elements) {
  Json out = Json::array();
  for (const auto& a : elements) {
    Json e;
    e["sigma"] = a.sigma.to_one_based();
    Json lambda = Json::array();
    for (const auto& l : a.lambda) lambda.push_back(l.to_string());
    e["lambda"] = std::move(lambda);
    out.push_back(std::move(e));
  }
  return out;
}

Json group_report(const evokit::PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_one_based());
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact automorphism computations for evolution algebras"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string field_flag;
  std::uint64_t max_modulus = evokit::kDefaultMaxModulus;
  evokit::AutOptions aut_options;
  std::uint64_t max_elements = 10000;
  bool oracle_check = false;
  evokit::OracleCaps oracle_caps;
  evokit::TransitivityCaps trans_caps;
  std::string family;
  int gen_n = 3;
  long gen_a = 2;
  long gen_b = 1;
  std::vector<int> gen_tags;

  auto add_common = [&](CLI::App* sub, bool with_field,
                        const char* field_help =
                            "reinterpret matrix entries over this field") {
    sub->add_option("input", in_path, "input JSON file")->required();
    sub->add_option("--out", out_path, "also write the report to this file");
    if (with_field) {
      sub->add_option("--field", field_flag, field_help);
    }
  };

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of an algebra");
  add_common(aut, true);
  aut->add_option("--max-dim", aut_options.max_dim, "search dimension cap");
  aut->add_option("--max-elements", max_elements,
                  "omit the element list above this order");
  aut->add_flag("--oracle-check", oracle_check,
                "also run the brute-force enumeration and compare");

  CLI::App* idem = app.add_subcommand("idem", "idempotence and natural idempotents");
  add_common(idem, true);

  CLI::App* rho_cmd = app.add_subcommand("rho", "permutation representation");
  add_common(rho_cmd, true);
  rho_cmd->add_option("--max-dim", aut_options.max_dim, "search dimension cap");

  CLI::App* rho_tilde_cmd =
      app.add_subcommand("rho-tilde", "restricted representation");
  add_common(rho_tilde_cmd, true);
  rho_tilde_cmd->add_option("--max-dim", aut_options.max_dim,
                            "search dimension cap");

  CLI::App* trans = app.add_subcommand("transitivity",
                                       "transitivity degree of a group");
  add_common(trans, false);
  trans->add_option("--max-k", trans_caps.max_k, "transitivity level cap");
  trans->add_option("--max-degree", trans_caps.max_degree, "degree cap");

  CLI::App* realize_cmd =
      app.add_subcommand("realize", "compile a graph into an algebra");
  realize_cmd->add_option("input", in_path, "input JSON file")->required();
  realize_cmd->add_option("--out", out_path,
                          "also write the compiled algebra to this file");
  realize_cmd->add_option("--field", field_flag,
                          "coefficient field for the compiled algebra");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check that a compiled graph algebra realizes the graph group");
  add_common(verify_cmd, true, "coefficient field for the compiled algebra");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force enumeration over GF(p)");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--max-dim", oracle_caps.max_dim,
                         "oracle dimension cap");
  oracle_cmd->add_option("--max-p", oracle_caps.max_modulus,
                         "oracle modulus cap");

  CLI::App* gen = app.add_subcommand("gen", "emit a fixture file");
  gen->add_option("family", family,
                  "identity | const | swap2 | cycle-algebra | graph-cycle | "
                  "graph-complete | graph-cycle-tagged")
      ->required();
  gen->add_option("--n", gen_n, "size parameter");
  gen->add_option("--a", gen_a, "diagonal value for const");
  gen->add_option("--b", gen_b, "off-diagonal value for const");
  gen->add_option("--tags", gen_tags, "1-based tagged vertices");
  gen->add_option("--field", field_flag, "coefficient field");
  gen->add_option("--out", out_path, "also write the file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::optional<evokit::FieldSpec> field_override =
        parse_field_flag(field_flag, max_modulus);

    if (aut->parsed()) {
      evokit::EvolutionAlgebra x =
          evokit::algebra_from_json(evokit::load_json_file(in_path),
                                    field_override);
      evokit::AutomorphismGroup a = evokit::automorphism_group(x, aut_options);
      Json report = evokit::aut_report(a, max_elements);
      if (oracle_check) {
        report["oracle_match"] =
            evokit::brute_force_automorphisms(x, oracle_caps) == a.elements;
      }
      emit(report, out_path);
    } else if (idem->parsed()) {
      evokit::EvolutionAlgebra x =
          evokit::algebra_from_json(evokit::load_json_file(in_path),
                                    field_override);
      Json report;
      report["idempotent"] = x.idempotent;
      report["determinant"] = x.det.to_string();
      if (x.idempotent) {
        evokit::NaturalIdempotents nat = evokit::idempotent_natural_elements(x);
        report["m"] = nat.count;
        Json witnesses = Json::array();
        for (const auto& w : nat.rescale) witnesses.push_back(w.to_string());
        report["witnesses"] = std::move(witnesses);
        report["normalized"] = evokit::algebra_to_json(nat.normalized);
      }
      emit(report, out_path);
    } else if (rho_cmd->parsed()) {
      evokit::EvolutionAlgebra x =
          evokit::algebra_from_json(evokit::load_json_file(in_path),
                                    field_override);
      evokit::RhoResult r = evokit::rho(x, aut_options);
      Json report = group_report(r.image);
      report["faithful"] = r.faithful;
      emit(report, out_path);
    } else if (rho_tilde_cmd->parsed()) {
      evokit::EvolutionAlgebra x =
          evokit::algebra_from_json(evokit::load_json_file(in_path),
                                    field_override);
      evokit::PermGroup g = evokit::rho_tilde(x, aut_options);
      Json report;
      report["m"] = g.degree();
      report["order"] = g.order();
      Json gens = Json::array();
      for (const auto& p : g.generators()) gens.push_back(p.to_one_based());
      report["generators"] = std::move(gens);
      emit(report, out_path);
    } else if (trans->parsed()) {
      evokit::PermGroup g =
          evokit::group_from_json(evokit::load_json_file(in_path));
      Json report;
      report["degree"] = g.transitivity_degree(trans_caps);
      emit(report, out_path);
    } else if (realize_cmd->parsed()) {
      evokit::LabeledGraph g =
          evokit::graph_from_json(evokit::load_json_file(in_path));
      evokit::FieldSpec field =
          field_override.value_or(evokit::FieldSpec::rationals());
      evokit::EvolutionAlgebra x = evokit::build_algebra_from_graph(g, field);
      evokit::RealizationReport r =
          evokit::verify_realization(g, field, aut_options);
      Json combined;
      combined["algebra"] = evokit::algebra_to_json(x);
      combined["report"] = evokit::realization_report_to_json(r);
      std::cout << evokit::dump_canonical(combined);
      if (!out_path.empty()) {
        evokit::write_text_file(
            out_path, evokit::dump_canonical(evokit::algebra_to_json(x)));
      }
    } else if (verify_cmd->parsed()) {
      evokit::LabeledGraph g =
          evokit::graph_from_json(evokit::load_json_file(in_path));
      evokit::FieldSpec field =
          field_override.value_or(evokit::FieldSpec::rationals());
      evokit::RealizationReport r =
          evokit::verify_realization(g, field, aut_options);
      emit(evokit::realization_report_to_json(r), out_path);
    } else if (oracle_cmd->parsed()) {
      evokit::EvolutionAlgebra x =
          evokit::algebra_from_json(evokit::load_json_file(in_path),
                                    field_override);
      std::vector<evokit::WeightedAutomorphism> elements =
          evokit::brute_force_automorphisms(x, oracle_caps);
      Json report;
      report["order"] = elements.size();
      report["cross_check"] = evokit::cross_check(x, oracle_caps);
      report["elements"] = element_list(elements);
      emit(report, out_path);
    } else if (gen->parsed()) {
      evokit::FieldSpec field =
          field_override.value_or(evokit::FieldSpec::rationals());
      Json file;
      if (family == "identity") {
        file = evokit::algebra_to_json(evokit::identity_algebra(gen_n, field));
      } else if (family == "const") {
        file = evokit::algebra_to_json(
            evokit::constant_algebra(gen_n, gen_a, gen_b, field));
      } else if (family == "swap2") {
        file = evokit::algebra_to_json(evokit::swap_algebra(field));
      } else if (family == "cycle-algebra") {
        file = evokit::algebra_to_json(
            evokit::cycle_graph_algebra(gen_n, field));
      } else if (family == "graph-cycle") {
        file = evokit::graph_to_json(evokit::builtin_graph("cycle", gen_n));
      } else if (family == "graph-complete") {
        file = evokit::graph_to_json(evokit::builtin_graph("complete", gen_n));
      } else if (family == "graph-cycle-tagged") {
        std::vector<int> tags;
        for (int t : gen_tags) tags.push_back(t - 1);
        file = evokit::graph_to_json(
            evokit::builtin_graph("cycle_with_tags", gen_n, tags));
      } else {
        throw evokit::DomainError("unknown fixture family: " + family);
      }
      emit(file, out_path);
    }
    return 0;
  } catch (const evokit::CapExceeded& e) {
    Json err;
    err["error"] = {{"kind", "cap"}, {"message", e.what()}};
    std::cout << evokit::dump_canonical(err);
    return 1;
  } catch (const evokit::DomainError& e) {
    Json err;
    err["error"] = {{"kind", "domain"}, {"message", e.what()}};
    std::cout << evokit::dump_canonical(err);
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = {{"kind", "internal"}, {"message", e.what()}};
    std::cout << evokit::dump_canonical(err);
    return 1;
  }
}
