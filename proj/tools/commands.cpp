#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "unicyclic/decomposition.hpp"
#include "unicyclic/errors.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/matrices.hpp"
#include "unicyclic/oracle.hpp"
#include "unicyclic/pinv.hpp"
#include "unicyclic/serialize.hpp"

namespace unicyclic::cli {

namespace {

using nlohmann::json;

std::vector<std::string> edge_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < m; ++e) out.push_back("e" + std::to_string(e + 1));
  return out;
}

std::vector<std::string> vertex_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < n; ++v) out.push_back(std::to_string(v + 1));
  return out;
}

// Parses and insists on a unicyclic graph; writes the reason to err otherwise.
std::optional<UnicyclicDecomposition> load_unicyclic(std::string_view text, std::ostream& err) {
  Graph g = parse_graph(text);
  const GraphClass c = classify(g);
  if (!is_unicyclic(c)) {
    err << "error: input is " << to_string(c)
        << "; the closed-form pseudoinverse needs a unicyclic graph (square incidence matrix)\n";
    return std::nullopt;
  }
  return UnicyclicDecomposition(std::move(g));
}

struct NamedMatrix {
  RationalMatrix matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::string formula;
};

NamedMatrix build(Emit what, const UnicyclicDecomposition& d, const CombinatorialPinv& h) {
  const std::size_t n = d.vertex_count();
  const std::size_t m = d.graph().edge_count();
  switch (what) {
    case Emit::H:
      return {h.h, edge_labels(m), vertex_labels(n), std::string(to_string(h.provenance))};
    case Emit::MH:
      return {predicted_MH(d), vertex_labels(n), vertex_labels(n),
              d.even() ? "I - P/n" : "identity"};
    case Emit::HM:
      return {predicted_HM(d), edge_labels(m), edge_labels(m),
              d.even() ? "edge-distance closed form" : "identity (incidence matrix invertible)"};
    case Emit::QPlus:
      return {qplus_splus(h).q_plus, vertex_labels(n), vertex_labels(n), "H^T H"};
    case Emit::SPlus:
      return {qplus_splus(h).s_plus, edge_labels(m), edge_labels(m), "H H^T"};
  }
  throw std::logic_error("unknown emit");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("format must be json or csv");
}

Emit parse_emit(std::string_view text) {
  if (text == "h") return Emit::H;
  if (text == "mh") return Emit::MH;
  if (text == "hm") return Emit::HM;
  if (text == "qplus") return Emit::QPlus;
  if (text == "splus") return Emit::SPlus;
  throw std::invalid_argument("emit must be one of h, mh, hm, qplus, splus");
}

std::string_view to_string(Emit e) {
  switch (e) {
    case Emit::H:
      return "h";
    case Emit::MH:
      return "mh";
    case Emit::HM:
      return "hm";
    case Emit::QPlus:
      return "qplus";
    case Emit::SPlus:
      return "splus";
  }
  return "?";
}

int cmd_classify(std::string_view graph_text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = parse_graph(graph_text);
    const GraphClass c = classify(g);
    out << to_string(c) << " n=" << g.vertex_count() << " m=" << g.edge_count();
    if (is_unicyclic(c)) out << " |C|=" << find_cycle(g).length();
    out << '\n';
    return kSuccess;
  });
}

int cmd_pinv(std::string_view graph_text, Format format, const std::vector<Emit>& emits,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto d = load_unicyclic(graph_text, err);
    if (!d) return kFailure;
    const CombinatorialPinv h = combinatorial_pinv(*d);
    const std::vector<Emit> wanted = emits.empty() ? std::vector<Emit>{Emit::H} : emits;

    if (format == Format::Csv) {
      bool first = true;
      for (Emit e : wanted) {
        const NamedMatrix nm = build(e, *d, h);
        if (!first) out << '\n';
        out << labelled_csv(to_string(e), nm.matrix, nm.row_labels, nm.col_labels);
        first = false;
      }
      return kSuccess;
    }

    json doc;
    doc["class"] = std::string(to_string(h.graph_class));
    doc["n"] = d->vertex_count();
    doc["m"] = d->graph().edge_count();
    doc["cycle_length"] = d->cycle_length();
    json matrices = json::object();
    for (Emit e : wanted) {
      const NamedMatrix nm = build(e, *d, h);
      json entry = matrix_to_json(nm.matrix);
      entry["row_labels"] = nm.row_labels;
      entry["col_labels"] = nm.col_labels;
      entry["formula"] = nm.formula;
      matrices[std::string(to_string(e))] = std::move(entry);
    }
    doc["matrices"] = std::move(matrices);
    out << doc.dump() << '\n';
    return kSuccess;
  });
}

int cmd_verify(std::string_view graph_text, const std::optional<std::string>& candidate_json,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto d = load_unicyclic(graph_text, err);
    if (!d) return kFailure;
    const IncidenceMatrix m(d->graph());

    RationalMatrix h;
    if (candidate_json) {
      try {
        h = matrix_from_json(json::parse(*candidate_json));
      } catch (const json::exception& e) {
        throw ParseError(std::string("candidate: ") + e.what(), 0);
      }
      if (h.rows() != m.cols() || h.cols() != m.rows()) {
        err << "error: candidate must be " << m.cols() << "x" << m.rows() << '\n';
        return kFailure;
      }
    } else {
      h = combinatorial_pinv(*d).h;
    }

    const PenroseReport penrose = check_penrose(m.matrix(), h);
    const RationalMatrix mh = mat_mul(m.matrix(), h);
    const RationalMatrix hm = mat_mul(h, m.matrix());
    const bool mh_ok = mh == predicted_MH(*d);
    const bool hm_ok = hm == predicted_HM(*d);

    json doc = json::parse(penrose.to_json());
    doc["class"] = d->even() ? "EvenUnicyclic" : "OddUnicyclic";
    doc["n"] = d->vertex_count();
    doc["cycle_length"] = d->cycle_length();
    doc["source"] = candidate_json ? "candidate" : "combinatorial";
    doc["mh_matches_prediction"] = mh_ok;
    doc["hm_matches_prediction"] = hm_ok;
    bool passed = penrose.all_pass() && mh_ok && hm_ok;
    if (d->even()) {
      const FingerprintReport fp = check_fingerprints(*d, h, hm);
      doc["fingerprints"] = {{"pendant", fp.pendant}, {"cycle_diagonal", fp.cycle_diagonal}};
      passed = passed && fp.all_pass();
    } else {
      doc["fingerprints"] = nullptr;
    }
    doc["passed"] = passed;
    out << doc.dump() << '\n';
    return passed ? kSuccess : kFailure;
  });
}

int cmd_gen(const GenSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << format_graph(generate_unicyclic(spec));
    return kSuccess;
  });
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto records = run_benchmark(options);
    out << bench_csv(records);
    for (const auto& r : records) {
      if (!r.verified) {
        err << "error: verification failed for n=" << r.n << " seed=" << r.seed << '\n';
        return kFailure;
      }
    }
    return kSuccess;
  });
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Closed-form Moore-Penrose inverses of unicyclic incidence matrices"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  std::string format_text = "json";
  std::vector<std::string> emit_texts;
  std::string candidate_path;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t cycle = 0;
  std::string parity_text = "any";
  std::size_t oracle_cap = 64;
  std::vector<std::size_t> sizes;
  std::size_t seeds = 5;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Edge-list file, or - for stdin")->capture_default_str();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a graph");
  add_input(classify_cmd);
  add_out(classify_cmd);

  CLI::App* pinv_cmd = app.add_subcommand("pinv", "Print the closed-form pseudoinverse");
  add_input(pinv_cmd);
  add_out(pinv_cmd);
  pinv_cmd->add_option("--format", format_text, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  pinv_cmd->add_option("--emit", emit_texts, "h, mh, hm, qplus or splus (repeatable)")
      ->check(CLI::IsMember({"h", "mh", "hm", "qplus", "splus"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "Certify the pseudoinverse");
  add_input(verify_cmd);
  add_out(verify_cmd);
  verify_cmd->add_option("--candidate", candidate_path,
                         "Matrix JSON to verify instead of the computed pseudoinverse");

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random unicyclic graph");
  add_out(gen_cmd);
  gen_cmd->add_option("--n", n, "Vertex count")->required();
  gen_cmd->add_option("--cycle", cycle, "Cycle length (default: random with the parity)");
  gen_cmd->add_option("--parity", parity_text, "even, odd or any")
      ->check(CLI::IsMember({"even", "odd", "any"}))
      ->capture_default_str();
  gen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

  CLI::App* bench_cmd = app.add_subcommand("bench", "Time closed form against the exact oracle");
  add_out(bench_cmd);
  bench_cmd->add_option("--sizes", sizes, "Vertex counts (>= 4)")->required()->delimiter(',');
  bench_cmd->add_option("--seeds", seeds, "Seeds per size")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "First seed")->capture_default_str();
  bench_cmd->add_option("--cycle", cycle, "Even cycle length (default: about sqrt(n))");
  bench_cmd->add_option("--oracle-cap", oracle_cap, "Largest n timed with the oracle")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kFailure;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  const auto read_text = [&](const std::string& path) -> std::optional<std::string> {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f) {
      err << "error: cannot read " << path << '\n';
      return std::nullopt;
    }
    return std::string(std::istreambuf_iterator<char>(f), {});
  };

  if (gen_cmd->parsed()) {
    GenSpec spec{n, std::nullopt, parse_parity(parity_text), seed};
    if (gen_cmd->count("--cycle") > 0) spec.cycle_length = cycle;
    return cmd_gen(spec, sink, err);
  }
  if (bench_cmd->parsed()) {
    BenchOptions options;
    options.sizes = sizes;
    options.seeds = seeds;
    options.base_seed = bench_cmd->count("--seed") > 0 ? seed : 1;
    options.oracle_cap = oracle_cap;
    if (bench_cmd->count("--cycle") > 0) options.cycle_length = cycle;
    return cmd_bench(options, sink, err);
  }

  const auto text = read_text(input);
  if (!text) return kFailure;
  if (classify_cmd->parsed()) return cmd_classify(*text, sink, err);
  if (pinv_cmd->parsed()) {
    std::vector<Emit> emits;
    for (const auto& e : emit_texts) emits.push_back(parse_emit(e));
    return cmd_pinv(*text, parse_format(format_text), emits, sink, err);
  }
  std::optional<std::string> candidate;
  if (!candidate_path.empty()) {
    candidate = read_text(candidate_path);
    if (!candidate) return kFailure;
  }
  return cmd_verify(*text, candidate, sink, err);
}

}  // namespace unicyclic::cli
