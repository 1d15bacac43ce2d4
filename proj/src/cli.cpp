#include "amorph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "amorph/claims.hpp"
#include "amorph/classify.hpp"
#include "amorph/errors.hpp"
#include "amorph/fusion.hpp"
#include "amorph/generators.hpp"
#include "amorph/hypergraph.hpp"
#include "amorph/report.hpp"
#include "amorph/scheme_io.hpp"

namespace amorph::cli {

namespace {

namespace fs = std::filesystem;

/// Raised for bad argument values that CLI11 cannot see (partition text etc.).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Settings {
  double tol = 1e-8;
  std::uint64_t seed = 1;
  std::string report_path;

  SpectralOptions spectral() const {
    SpectralOptions o;
    o.tol = Tolerance::uniform(tol);
    o.seed = seed;
    return o;
  }
  VerifyOptions verify() const {
    VerifyOptions o;
    o.spectral = spectral();
    return o;
  }
};

std::string scheme_id(const std::string& path) { return fs::path(path).stem().string(); }

void print_matrix(std::ostream& out, const std::string& title, const Eigen::MatrixXd& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      cells[r][c] = format_number(m(r, c));
      width = std::max(width, cells[r][c].size());
    }
  }
  out << title << ":\n";
  for (const auto& row : cells) {
    out << ' ';
    for (const auto& cell : row) out << ' ' << std::setw(static_cast<int>(width)) << cell;
    out << '\n';
  }
}

std::string join_ints(const std::vector<int>& values) {
  std::string s;
  for (int x : values) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void print_sets(std::ostream& out, const std::vector<IndexSet>& sets) {
  for (const auto& s : sets) out << "  " << format_set(s) << '\n';
}

ClassPartition parse_partition(const std::string& text, int d) {
  try {
    return ClassPartition::parse(text, d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--partition: ") + e.what());
  }
}

Side parse_side(const std::string& text) {
  if (text == "relations") return Side::Relations;
  if (text == "idempotents") return Side::Idempotents;
  throw UsageError("--side must be relations or idempotents");
}

void write_report(const Settings& settings, const Json& record) {
  if (settings.report_path.empty()) return;
  std::ofstream file(settings.report_path, std::ios::binary);
  if (!file) throw Error("cannot write report " + settings.report_path);
  file << record.dump(2) << '\n';
}

// ---- subcommands ---------------------------------------------------------

int cmd_validate(const Settings& s, const std::string& path, std::ostream& out) {
  auto scheme = load_scheme(path);
  out << path << ": valid scheme, v = " << scheme.v() << ", d = " << scheme.d() << ", valencies "
      << join_ints(scheme.valencies()) << '\n';
  Json rec;
  rec["scheme"] = scheme_id(path);
  rec["valid"] = true;
  rec["v"] = scheme.v();
  rec["d"] = scheme.d();
  rec["valencies"] = scheme.valencies();
  write_report(s, rec);
  return kExitOk;
}

int cmd_spectrum(const Settings& s, const std::string& path, std::ostream& out) {
  auto scheme = load_scheme(path);
  auto spec = spectral_decomposition(scheme, s.spectral());
  out << "valencies:      " << join_ints(spec.valencies) << '\n';
  out << "multiplicities: " << join_ints(spec.multiplicities) << '\n';
  print_matrix(out, "P", spec.P);
  print_matrix(out, "Q", spec.Q);
  Json rec;
  rec["scheme"] = scheme_id(path);
  rec["v"] = spec.v;
  rec["d"] = spec.d;
  rec["spectral"] = spectral_json(spec);
  write_report(s, rec);
  return kExitOk;
}

int cmd_fuse(const Settings& s, const std::string& path, const std::string& partition, std::ostream& out) {
  auto scheme = load_scheme(path);
  auto pi = parse_partition(partition, scheme.d());
  auto spec = spectral_decomposition(scheme, s.spectral());
  auto result = fuse_direct(scheme, spec, pi);
  Json rec;
  rec["scheme"] = scheme_id(path);
  rec["partition"] = pi.to_string();
  rec["fuses"] = static_cast<bool>(result);
  out << "pi = " << pi.to_string() << '\n';
  if (result) {
    out << "fuses: yes\n";
    out << "rho = " << result.outcome->rho.to_string() << '\n';
    print_matrix(out, "fused P", result.outcome->fused_P);
    rec["rho"] = result.outcome->rho.to_string();
    rec["fused_P"] = matrix_json(result.outcome->fused_P);
    rec["fused_valencies"] = result.outcome->fused.valencies();
  } else {
    out << "fuses: no (" << result.failure->what() << ")\n";
    rec["witness"] = result.failure->what();
  }
  write_report(s, rec);
  return kExitOk;
}

int cmd_tuples(const Settings& s, const std::string& path, int k, std::ostream& out) {
  auto scheme = load_scheme(path);
  auto spec = spectral_decomposition(scheme, s.spectral());
  if (k > scheme.d()) throw UsageError("--k exceeds the class count");
  auto tuples = enumerate_fusing_tuples(scheme, spec, k);
  out << tuples.size() << " fusing " << k << "-tuples\n";
  print_sets(out, tuples);
  Json rec;
  rec["scheme"] = scheme_id(path);
  rec["k"] = k;
  rec["tuples"] = sets_json(tuples);
  write_report(s, rec);
  return kExitOk;
}

int cmd_hypergraph(const Settings& s, const std::string& path, int k, const std::string& side_text,
                   const std::string& dot_path, std::ostream& out) {
  const Side side = parse_side(side_text);
  auto scheme = load_scheme(path);
  if (k > scheme.d()) throw UsageError("--k exceeds the class count");
  auto spec = spectral_decomposition(scheme, s.spectral());
  auto h = build_fusing_hypergraph(scheme, spec, k, side);
  out << "fusing " << side_name(side) << " " << k << "-hypergraph on " << h.num_vertices() << " vertices, "
      << h.num_edges() << " edges" << (h.is_complete() ? " (complete)" : "") << '\n';
  export_edge_list(h, out);
  Json rec;
  rec["scheme"] = scheme_id(path);
  rec["hypergraph"] = hypergraph_json(h);
  if (k == 2) {
    auto shape = graph_shape(h);
    out << "connected: " << (shape.connected ? "yes" : "no") << ", path: " << (shape.is_path ? "yes" : "no") << '\n';
    rec["hypergraph"]["connected"] = shape.connected;
    rec["hypergraph"]["path"] = shape.is_path;
  }
  if (!dot_path.empty()) {
    std::ostringstream dot;
    export_dot(h, dot);
    std::ofstream file(dot_path, std::ios::binary);
    if (!file) throw Error("cannot write " + dot_path);
    file << dot.str();
  }
  write_report(s, rec);
  return kExitOk;
}

int cmd_sunflowers(const Settings& s, const std::string& path, std::ostream& out) {
  auto scheme = load_scheme(path);
  if (scheme.d() < 3) throw PreconditionFailed("sunflowers need d >= 3");
  auto spec = spectral_decomposition(scheme, s.spectral());
  auto h = build_fusing_hypergraph(scheme, spec, 3, Side::Relations);
  auto cores = sunflower_cores(h);
  out << cores.size() << " sunflower cores\n";
  print_sets(out, cores);
  Json rec;
  rec["scheme"] = scheme_id(path);
  rec["cores"] = sets_json(cores);
  write_report(s, rec);
  return kExitOk;
}

int cmd_amorphic(const Settings& s, const std::string& path, bool oracle, std::ostream& out) {
  auto scheme = load_scheme(path);
  auto spec = spectral_decomposition(scheme, s.spectral());
  AmorphicVerdict verdict;
  if (oracle) {
    verdict = is_amorphic(scheme, spec);
  } else {
    if (scheme.d() >= 3) verdict.certificate = canonical_form_check(spec);
    verdict.amorphic = scheme.d() <= 2 || verdict.certificate.has_value();
  }
  out << "amorphic: " << (verdict.amorphic ? "yes" : "no") << '\n';
  if (verdict.certificate) {
    const auto& c = *verdict.certificate;
    out << "canonical form in " << (c.source == EigenmatrixKind::P ? "P" : "Q") << ", rows " << join_ints(c.row_perm)
        << '\n';
    if (c.n) {
      out << "n = " << format_number(*c.n) << ", t =";
      for (double t : c.t) out << ' ' << format_number(t);
      out << '\n';
    }
  }
  if (verdict.oracle) out << "oracle: " << (*verdict.oracle ? "every partition fuses" : "not amorphic") << '\n';
  if (verdict.counterexample) out << "non-fusing partition: " << verdict.counterexample->to_string() << '\n';
  Json rec;
  rec["scheme"] = scheme_id(path);
  rec["amorphic"] = verdict_json(verdict);
  write_report(s, rec);
  return kExitOk;
}

void print_claims(std::ostream& out, const ClaimReport& report) {
  for (const auto& c : report.claims) {
    const char* tag = !c.applicable ? "n/a      " : c.verified ? "verified " : "FALSIFIED";
    out << "  " << tag << "  " << c.id;
    if (!c.witness.empty()) out << ": " << c.witness;
    out << '\n';
  }
}

int cmd_verify(const Settings& s, const std::string& path, std::ostream& out) {
  auto scheme = load_scheme(path);
  auto analysis = analyze_scheme(scheme, s.verify());
  out << scheme_id(path) << ": v = " << scheme.v() << ", d = " << scheme.d() << ", "
      << (analysis.amorphic.amorphic ? "amorphic" : "not amorphic") << '\n';
  print_claims(out, analysis.report);
  write_report(s, analysis_json(scheme_id(path), analysis, s.spectral()));
  return analysis.report.falsified() ? kExitFalsified : kExitOk;
}

std::string describe(const std::exception& e, const std::string& path) {
  if (auto* p = dynamic_cast<const ParseError*>(&e)) {
    return path + ":" + std::to_string(p->line()) + ":" + std::to_string(p->column()) + ": " + p->what();
  }
  return path + ": " + e.what();
}

int cmd_corpus(const Settings& s, const std::string& dir, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".scheme") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Json records = Json::array();
  int falsified = 0;
  int errors = 0;
  for (const auto& file : files) {
    const std::string id = file.stem().string();
    try {
      auto scheme = load_scheme(file);
      auto analysis = analyze_scheme(scheme, s.verify());
      int applicable = 0;
      int verified = 0;
      for (const auto& c : analysis.report.claims) {
        applicable += c.applicable;
        verified += c.verified;
      }
      out << id << ": v = " << scheme.v() << ", d = " << scheme.d() << ", "
          << (analysis.amorphic.amorphic ? "amorphic" : "not amorphic") << ", " << verified << "/" << applicable
          << " applicable claims verified\n";
      if (analysis.report.falsified()) {
        ++falsified;
        print_claims(out, analysis.report);
      }
      records.push_back(analysis_json(id, analysis, s.spectral()));
    } catch (const Falsification& e) {
      ++falsified;
      err << describe(e, file.string()) << '\n';
      records.push_back({{"scheme", id}, {"falsification", e.what()}});
    } catch (const OracleDisagreement& e) {
      ++falsified;
      err << describe(e, file.string()) << '\n';
      records.push_back({{"scheme", id}, {"falsification", e.what()}});
    } catch (const std::exception& e) {
      ++errors;
      err << describe(e, file.string()) << '\n';
      records.push_back({{"scheme", id}, {"error", describe(e, file.string())}});
    }
  }
  out << files.size() << " schemes, " << falsified << " falsified, " << errors << " errors\n";
  Json rec;
  rec["directory"] = dir;
  rec["schemes"] = std::move(records);
  rec["falsified"] = falsified;
  rec["errors"] = errors;
  write_report(s, rec);
  if (falsified) return kExitFalsified;
  return errors ? kExitError : kExitOk;
}

void emit_scheme(const AssociationScheme& scheme, const std::string& comment, const std::string& out_path,
                 std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    write_scheme(out, scheme.labels(), comment);
  } else {
    save_scheme(out_path, scheme.labels(), comment);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Association scheme fusion toolkit", "amorph"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  app.add_option("--tol", settings.tol, "floating-point tolerance (absolute and relative)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", settings.seed, "seed for the random spectral coefficients")->capture_default_str();
  app.add_option("--report", settings.report_path, "write a JSON report to this path");

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "scheme file")->required(); };

  auto* validate = app.add_subcommand("validate", "check the scheme axioms");
  add_file(validate);
  auto* spectrum = app.add_subcommand("spectrum", "eigenmatrices P and Q");
  add_file(spectrum);

  std::string partition;
  auto* fuse = app.add_subcommand("fuse", "fuse classes along a partition");
  add_file(fuse);
  fuse->add_option("--partition", partition, "blocks such as \"1,3|2\" or \"0|1,3|2\"")->required();

  int k = 2;
  auto* tuples = app.add_subcommand("tuples", "fusing k-tuples of relations");
  add_file(tuples);
  tuples->add_option("--k", k, "tuple size")->required()->check(CLI::IsMember({2, 3}));

  std::string side = "relations";
  std::string dot_path;
  auto* hypergraph = app.add_subcommand("hypergraph", "fusing k-hypergraph");
  add_file(hypergraph);
  hypergraph->add_option("--k", k, "edge size")->required()->check(CLI::IsMember({2, 3}));
  hypergraph->add_option("--side", side, "relations or idempotents")->capture_default_str();
  hypergraph->add_option("--dot", dot_path, "write the graph (k = 2) in DOT format");

  auto* sunflowers = app.add_subcommand("sunflowers", "sunflower cores of the fusing-relations 3-hypergraph");
  add_file(sunflowers);

  bool oracle = false;
  auto* amorphic = app.add_subcommand("amorphic", "amorphic verdict");
  add_file(amorphic);
  amorphic->add_flag("--oracle", oracle, "confirm by fusing every partition");

  auto* verify = app.add_subcommand("verify", "check every structural claim on one scheme");
  add_file(verify);

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "verify every .scheme file in a directory");
  corpus->add_option("dir", dir, "directory")->required();

  std::string out_path;
  auto* generate = app.add_subcommand("generate", "write a generated scheme file");
  generate->require_subcommand(1);
  generate->add_option("-o,--out", out_path, "output path (default stdout)");

  int n = 0;
  std::string groups;
  std::vector<int> sizes;
  auto* gen_net = generate->add_subcommand("net", "net scheme on GF(n)^2 grouped by slope");
  gen_net->add_option("--n", n, "field order")->required();
  auto* groups_opt = gen_net->add_option("--groups", groups, "slope groups such as \"0,1|2|inf\"");
  gen_net->add_option("--sizes", sizes, "consecutive group sizes")->delimiter(',')->excludes(groups_opt);

  int q = 0;
  int d = 0;
  std::optional<int> generator;
  auto* gen_cyc = generate->add_subcommand("cyclotomic", "cyclotomic scheme over GF(q)");
  gen_cyc->add_option("--q", q, "field order")->required();
  gen_cyc->add_option("--d", d, "number of classes")->required();
  gen_cyc->add_option("--generator", generator, "primitive element (field index)");

  int m = 0;
  auto* gen_ham = generate->add_subcommand("hamming", "binary Hamming scheme H(m, 2)");
  gen_ham->add_option("--m", m, "word length")->required();

  int v = 0;
  auto* gen_complete_cmd = generate->add_subcommand("complete", "one-class scheme K_v");
  gen_complete_cmd->add_option("--v", v, "number of points")->required();

  std::vector<std::string> argv_store{"amorph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(settings, file, out);
    if (*spectrum) return cmd_spectrum(settings, file, out);
    if (*fuse) return cmd_fuse(settings, file, partition, out);
    if (*tuples) return cmd_tuples(settings, file, k, out);
    if (*hypergraph) return cmd_hypergraph(settings, file, k, side, dot_path, out);
    if (*sunflowers) return cmd_sunflowers(settings, file, out);
    if (*amorphic) return cmd_amorphic(settings, file, oracle, out);
    if (*verify) return cmd_verify(settings, file, out);
    if (*corpus) return cmd_corpus(settings, dir, out, err);
    if (*generate) {
      if (*gen_net) {
        SlopeGrouping grouping = [&] {
          try {
            if (!groups.empty()) return SlopeGrouping::parse(groups, n);
            if (!sizes.empty()) return SlopeGrouping::sized(n, sizes);
            return SlopeGrouping::singletons(n);
          } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("slope grouping: ") + e.what());
          }
        }();
        emit_scheme(gen_net_scheme(n, grouping), "net scheme n = " + std::to_string(n), out_path, out);
      } else if (*gen_cyc) {
        emit_scheme(gen_cyclotomic({q, d, generator}),
                    "cyclotomic scheme q = " + std::to_string(q) + ", d = " + std::to_string(d), out_path, out);
      } else if (*gen_ham) {
        emit_scheme(gen_hamming_binary(m), "binary Hamming scheme m = " + std::to_string(m), out_path, out);
      } else if (*gen_complete_cmd) {
        emit_scheme(gen_complete(v), "complete scheme v = " + std::to_string(v), out_path, out);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Falsification& e) {
    err << "falsified (" << e.claim() << "): " << e.what() << '\n';
    return kExitFalsified;
  } catch (const OracleDisagreement& e) {
    err << "falsified: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const std::exception& e) {
    err << describe(e, !file.empty() ? file : !dir.empty() ? dir : std::string("amorph")) << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace amorph::cli
