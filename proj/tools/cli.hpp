#pragma once

// `gtpt` command line. dispatch() is separate from main() so the tests can
// drive it with in-memory streams.
//
// Exit codes: 0 success, 1 negative verdict (iso / cospectral), 2 usage or
// input error, 3 internal error.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "gtpt/gtpt.hpp"

namespace gtpt::cli {

namespace detail {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline void emit(const Streams& io, const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    io.out << text;
  else
    write_text_file(out_path, text);
}

inline std::string render(const ClusteredGraph& g, bool dot) { return dot ? to_dot(g) : dump(to_json(g)); }

inline Json violation_json(const ConditionResult& r) {
  Json j;
  j["holds"] = r.holds;
  if (r.violation) {
    const auto& v = *r.violation;
    j["violation"] = {{"i1", v.i1}, {"j1", v.j1}, {"i2", v.i2}, {"j2", v.j2},
                      {"alpha", v.alpha}, {"beta", v.beta}, {"lhs", v.lhs}, {"rhs", v.rhs}};
  }
  return j;
}

inline Json verdict_json(const PairVerdict& v) {
  Json j;
  j["cospectral"] = v.cospectral;
  j["isomorphic"] = v.isomorphic;
  j["partially_symmetric"] = v.partially_symmetric;
  j["charpoly"] = to_json(v.charpoly);
  j["charpoly_transpose"] = to_json(v.charpoly_transpose);
  j["degree_sequence"] = v.degree_sequence;
  j["degree_sequence_transpose"] = v.degree_sequence_transpose;
  return j;
}

inline std::uint64_t max_candidates_from_env() {
  if (const char* s = std::getenv("GTPT_MAX_CANDIDATES")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error("GTPT_MAX_CANDIDATES must be a non-negative integer");
  }
  return EnumerationOptions{}.max_candidates;
}

}  // namespace detail

inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  const detail::Streams io{out, err};
  CLI::App app{"Partial-transpose cospectral graph toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gtpt 0.1.0");

  std::string in, a_path, b_path, out_path, config;
  bool dot = false;

  auto* transpose = app.add_subcommand("transpose", "Partial transpose of a clustered graph");
  transpose->add_option("--in", in, "graph JSON")->required();
  transpose->add_option("--out", out_path, "output file (default stdout)");
  transpose->add_flag("--dot", dot, "emit Graphviz DOT");

  bool exact = false, approx = false;
  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial and eigenvalues");
  spectrum->add_option("--in", in, "graph JSON")->required();
  spectrum->add_flag("--exact", exact, "only the exact characteristic polynomial");
  spectrum->add_flag("--approx", approx, "only floating-point eigenvalues");

  auto* cospectral = app.add_subcommand("cospectral", "Exact cospectrality check (exit 1 if not cospectral)");
  cospectral->add_option("--a", a_path, "first graph JSON");
  cospectral->add_option("--b", b_path, "second graph JSON");
  cospectral->add_option("--in", in, "compare a graph with its partial transpose");

  auto* iso = app.add_subcommand("iso", "Isomorphism check (exit 1 if not isomorphic)");
  iso->add_option("--a", a_path, "first graph JSON");
  iso->add_option("--b", b_path, "second graph JSON");
  iso->add_option("--in", in, "compare a graph with its partial transpose");

  auto* conditions = app.add_subcommand("conditions", "Commuting / normality conditions");
  conditions->add_option("--in", in, "graph JSON")->required();

  std::uint64_t seed = 0;
  std::size_t budget = WitnessOptions{}.budget;
  std::string matrix_path;
  auto* witness = app.add_subcommand("witness", "Common similarity witness X with X B^t = B X for all blocks");
  witness->add_option("--in", in, "graph JSON");
  witness->add_option("--matrix", matrix_path, "JSON file holding one 0/1 matrix");
  witness->add_option("--seed", seed, "seed for the randomized phase")->capture_default_str();
  witness->add_option("--budget", budget, "maximum combinations tried")->capture_default_str();

  std::string procedure;
  bool waive = false;
  auto* construct = app.add_subcommand("construct", "Build a graph with a procedure or template");
  construct->add_option("--procedure", procedure, "1 | 2 | altcluster | pad | thm7")
      ->required()
      ->check(CLI::IsMember({"1", "2", "altcluster", "pad", "thm7"}));
  construct->add_option("--in", in, "input JSON (graph, or bipartite sides for pad)");
  construct->add_option("--config", config, "procedure 1 / thm7 configuration JSON");
  construct->add_option("--out", out_path, "output file (default stdout)");
  construct->add_flag("--waive", waive, "skip the commuting/normality precondition");
  construct->add_flag("--dot", dot, "emit Graphviz DOT");

  auto* verify = app.add_subcommand("verify", "Cospectrality and isomorphism of a graph and its partial transpose");
  verify->add_option("--in", in, "graph JSON")->required();

  std::string model, mode = "dedup-graph", report_path, pairs_dir;
  std::optional<int> m_opt, n_opt;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  bool mirror_intra = false;
  auto* enumerate = app.add_subcommand("enumerate", "Count cospectral non-isomorphic pairs for a model family");
  enumerate->add_option("--model", model, "1a 1b 2 3a 3b 3c 4a 4b 4c")->required();
  enumerate->add_option("--m", m_opt, "cluster size (final cluster size for 3a-4c)");
  enumerate->add_option("--n", n_opt, "cluster count (final count for 3a-4c)");
  enumerate->add_option("--mode", mode, "labeled | dedup-graph | dedup-pair")->capture_default_str();
  enumerate->add_option("--report", report_path, "CSV report file (default stdout)");
  enumerate->add_option("--pairs", pairs_dir, "directory for the listed (G, G^tau) pairs");
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_flag("--mirror-intra", mirror_intra, "models 3a-4c: mirror intra-cluster edges in Procedure 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*transpose) {
      detail::emit(io, detail::render(partial_transpose(read_graph(in)), dot), out_path);
      return 0;
    }
    if (*spectrum) {
      const auto g = read_graph(in);
      Json j;
      if (!approx) j["charpoly"] = to_json(char_poly(g));
      if (!exact) j["eigenvalues"] = approx_eigenvalues(g);
      out << dump(j);
      return 0;
    }
    if (*cospectral || *iso) {
      ClusteredGraph a, b;
      if (!in.empty()) {
        a = read_graph(in);
        b = partial_transpose(a);
      } else {
        if (a_path.empty() || b_path.empty()) throw Error("give --in, or both --a and --b");
        a = read_graph(a_path);
        b = read_graph(b_path);
      }
      Json j;
      bool verdict = false;
      if (*cospectral) {
        verdict = are_cospectral(a, b);
        j["cospectral"] = verdict;
        j["charpoly_a"] = to_json(char_poly(a));
        j["charpoly_b"] = to_json(char_poly(b));
      } else {
        std::optional<std::vector<int>> mapping;
        if (are_isomorphic(a, b)) mapping = find_isomorphism(to_simple(a), to_simple(b));
        verdict = mapping.has_value();
        j["isomorphic"] = verdict;
        if (mapping) {
          Json map = Json::array();
          for (std::size_t v = 0; v < mapping->size(); ++v)
            map.push_back(Json::array({to_json(a.label(v)), to_json(b.label(static_cast<std::size_t>((*mapping)[v])))}));
          j["mapping"] = std::move(map);
        }
      }
      out << dump(j);
      return verdict ? 0 : 1;
    }
    if (*conditions) {
      const auto g = read_graph(in);
      Json j;
      j["commuting"] = detail::violation_json(commuting_condition(g));
      j["normality"] = detail::violation_json(normality_condition(g));
      j["blocks_commuting_normal"] = blocks_commuting_normal(block_matrix(g));
      j["partially_symmetric"] = is_partially_symmetric(g);
      out << dump(j);
      return 0;
    }
    if (*witness) {
      if (in.empty() == matrix_path.empty()) throw Error("give exactly one of --in and --matrix");
      std::vector<BinaryMatrix> family;
      Json blocks = Json::array();
      if (!in.empty()) {
        for (const auto& [b, ij] : distinct_blocks(block_matrix(read_graph(in)))) {
          family.push_back(b);
          blocks.push_back(Json::array({ij.first, ij.second}));
        }
      } else {
        family.push_back(binary_matrix_from_json(parse_json(read_text_file(matrix_path))));
      }
      const auto search = find_similarity_witness(family, {budget, seed});
      Json j;
      j["found"] = search.witness.has_value();
      if (!in.empty()) j["blocks"] = std::move(blocks);
      j["null_space_dimension"] = search.null_space_dimension;
      j["trials"] = search.trials;
      if (search.witness) j["witness"] = matrix_to_json(search.witness->matrix);
      if (!search.diagnostic.empty()) j["diagnostic"] = search.diagnostic;
      out << dump(j);
      return 0;
    }
    if (*construct) {
      if (in.empty() && procedure != "thm7") throw Error("--in is required for procedure " + procedure);
      if (procedure == "1") {
        if (config.empty()) throw Error("procedure 1 needs --config");
        const auto cfg = procedure1_config_from_json(parse_json(read_text_file(config)));
        const auto h = procedure_1(read_graph(in), cfg.clusters, cfg.blocks, {.waive_conditions = waive || cfg.waive_conditions});
        detail::emit(io, detail::render(h, dot), out_path);
      } else if (procedure == "2") {
        detail::emit(io, detail::render(procedure_2(read_graph(in), {.waive_conditions = waive}), dot), out_path);
      } else if (procedure == "altcluster") {
        detail::emit(io, detail::render(alternate_clustering(read_graph(in)), dot), out_path);
      } else if (procedure == "pad") {
        const auto padded = pad_bipartite(bipartite_from_json(parse_json(read_text_file(in))));
        if (dot) {
          detail::emit(io, to_dot(padded.graph), out_path);
        } else {
          Json j = to_json(padded.graph);
          Json pad = Json::array();
          for (const auto& v : padded.padding) pad.push_back(to_json(v));
          j["padding"] = std::move(pad);
          detail::emit(io, dump(j), out_path);
        }
      } else {  // thm7
        if (config.empty()) throw Error("thm7 needs --config");
        const auto cfg = template_config_from_json(parse_json(read_text_file(config)));
        const auto model = build_nonnormal_model(cfg.matrix, cfg.n, cfg.blocks, {budget, seed});
        if (dot) {
          detail::emit(io, to_dot(model.graph), out_path);
        } else {
          Json j;
          j["graph"] = to_json(model.graph);
          j["transpose"] = to_json(model.transpose);
          j["witness"] = matrix_to_json(model.witness.matrix);
          j["certified"] = model.certificate.has_value();
          j["cospectral"] = model.cospectral;
          j["isomorphic"] = model.isomorphic;
          j["degree_sequence"] = model.degrees;
          j["degree_sequence_transpose"] = model.degrees_transpose;
          detail::emit(io, dump(j), out_path);
        }
      }
      return 0;
    }
    if (*verify) {
      out << dump(detail::verdict_json(verify_pair(read_graph(in))));
      return 0;
    }
    if (*enumerate) {
      const auto id = parse_model(model);
      if (!id) throw Error("unknown model \"" + model + "\"");
      const auto counting = parse_mode(mode);
      if (!counting) throw Error("unknown mode \"" + mode + "\"");
      ModelSpec spec{*id, 0, 0, *counting, mirror_intra};
      if (uses_procedure_2(*id)) {
        spec.m = m_opt.value_or(3);
        if (!n_opt) throw Error("models 3a-4c need --n");
        spec.n = *n_opt;
      } else {
        if (!m_opt) throw Error("--m is required for model " + model);
        spec.m = *m_opt;
        spec.n = n_opt.value_or(*id == ModelId::m2 ? 3 : 2);
      }
      const auto report = enumerate_kappa(spec, {jobs, detail::max_candidates_from_env()});

      std::ostringstream csv;
      csv << "model,m,n,mode,kappa,scanned,seconds\n";
      csv << to_string(spec.model) << ',' << spec.m << ',' << spec.n << ',' << to_string(spec.mode) << ','
          << report.kappa << ',' << report.candidates_scanned << ',' << std::fixed << std::setprecision(3)
          << report.elapsed_seconds << '\n';
      detail::emit(io, csv.str(), report_path);

      if (!pairs_dir.empty()) {
        std::filesystem::create_directories(pairs_dir);
        for (std::size_t k = 0; k < report.pairs.size(); ++k) {
          std::ostringstream name;
          name << "pair_" << std::setw(4) << std::setfill('0') << k + 1;
          const auto base = std::filesystem::path(pairs_dir) / name.str();
          write_text_file(base.string() + "_G.json", dump(to_json(report.pairs[k].first)));
          write_text_file(base.string() + "_Gt.json", dump(to_json(report.pairs[k].second)));
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "gtpt: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "gtpt: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "gtpt: internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace gtpt::cli
