#include "hopfalg_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hopfalg/errors.hpp"
#include "hopfalg/serialize.hpp"

namespace hopfalg::cli {

namespace {

struct Job {
  std::string command;
  std::string input;
  std::string output;
  std::string field;
  std::uint64_t seed = 0;
  std::size_t roundtrip_rank = 2;
  bool skip_roundtrip = false;
  std::string report = "text";
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kInputUnreadable, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Failure(kInputUnreadable, "cannot read " + path);
  return ss.str();
}

void write_output(const Job& job, const std::string& text, std::ostream& out) {
  if (job.output.empty()) return;
  if (job.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(job.output, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure(kOutputUnwritable, "cannot write " + job.output);
  f << text;
  f.flush();
  if (!f) throw Failure(kOutputUnwritable, "cannot write " + job.output);
}

void print_report(const Job& job, const Report& rep, std::ostream& out) {
  if (job.output == "-") return;
  if (job.report == "json") {
    out << report_json(rep);
    return;
  }
  out << rep.to_text();
  if (rep.ok()) {
    out << "ok\n";
  } else {
    out << "FAILED:";
    for (const auto& t : rep.failed_tags()) out << " " << t;
    out << "\n";
  }
}

Document load(const Job& job) {
  std::optional<Field> field;
  if (!job.field.empty()) {
    try {
      field = Field::parse(job.field);
    } catch (const Error& ex) {
      throw Failure(kUsage, std::string("--field: ") + ex.what());
    }
  }
  return parse_document(read_input(job.input), field);
}

int cmd_reconstruct(const Job& job, std::ostream& out) {
  Document doc = load(job);
  if (!doc.presentation) throw SchemaError("reconstruct needs \"objects\" and the presentation tables");
  ReconstructOptions opt;
  opt.seed = job.seed;
  opt.roundtrip_rank = job.roundtrip_rank;
  opt.roundtrip = !job.skip_roundtrip;
  Reconstruction r = reconstruct(*doc.presentation, opt);
  OutputParts parts;
  parts.input = &doc;
  parts.reconstruction = &r;
  parts.report = &r.report;
  write_output(job, write_document(parts), out);
  print_report(job, r.report, out);
  return r.report.ok() ? kOk : kCheckFailed;
}

// check-coalgebroid, check-bialgebroid and verify share this path. verify
// computes the antipodes the file leaves out.
int cmd_check(const Job& job, std::ostream& out) {
  Document doc = load(job);
  if (!doc.structure) throw SchemaError(job.command + " needs a \"coend\" section");
  Report rep;
  CoalgebroidPtr c = structure_coalgebroid(doc);
  rep.merge(check_coalgebroid(*c));
  const bool want_bialgebroid = job.command != "check-coalgebroid";
  if (want_bialgebroid && (doc.structure->product || job.command == "check-bialgebroid")) {
    BialgebroidPtr h = structure_bialgebroid(doc, c);
    rep.merge(check_bialgebroid(*h));
    if (job.command == "verify") {
      Antipode a = compute_antipode(h);
      if (doc.structure->antipode) a.nabla = a.space->flat_proj() * *doc.structure->antipode;
      rep.merge(check_antipode_axioms(a));
      rep.merge(check_antipode_identities(a));
      OppositeAntipode o = compute_opposite_antipode(h);
      if (doc.structure->opposite_antipode) o.nabla = o.space->flat_proj() * *doc.structure->opposite_antipode;
      rep.merge(check_opposite_antipode(o));
    }
  }
  OutputParts parts;
  parts.input = &doc;
  parts.report = &rep;
  write_output(job, write_document(parts), out);
  print_report(job, rep, out);
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_dualize(const Job& job, std::ostream& out) {
  Document doc = load(job);
  Report rep;
  OutputParts parts;
  parts.input = &doc;
  for (const auto& [name, m] : doc.modules) {
    if (!m.has(ActionSelector::tau_left) || !m.has(ActionSelector::tau_right))
      throw SchemaError("modules." + name + ": dualize needs tau_left and tau_right");
    Bimodule b = m.tau_pair();
    DualOutput d;
    d.module = name;
    try {
      d.left = dual_module(b, job.seed);
      d.right = right_dual_module(b, job.seed);
    } catch (const NotProjective& ex) {
      throw NotProjective("module " + name + ": " + ex.what());
    }
    rep.merge(check_dual(*d.left));
    rep.merge(check_dual(*d.right));
    parts.duals.push_back(std::move(d));
  }
  parts.report = &rep;
  write_output(job, write_document(parts), out);
  print_report(job, rep, out);
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_info(const Job& job, std::ostream& out) {
  Document doc = load(job);
  out << "field: " << doc.field.name() << "\n";
  out << "algebra: dim " << doc.algebra->dim() << "\n";
  for (const auto& [name, m] : doc.modules) out << "module " << name << ": dim " << m.dim() << "\n";
  if (doc.presentation) {
    const Presentation& p = *doc.presentation;
    for (const auto& o : p.objects) out << "object " << o.name << ": dim " << o.module.dim << "\n";
    out << "morphisms: " << p.morphisms.size() << "\n";
    out << "tensor entries: " << p.tensor.size() << "\n";
    out << "left duals: " << p.duals.size() << "\n";
    out << "right duals: " << p.right_duals.size() << "\n";
    out << "unit object: " << p.unit_object << "\n";
  }
  if (doc.structure) {
    out << "coend: dim_L " << doc.structure->carrier.dim();
    if (doc.structure->product) out << ", product";
    if (doc.structure->antipode) out << ", antipode";
    if (doc.structure->opposite_antipode) out << ", opposite_antipode";
    out << "\n";
  }
  return kOk;
}

int dispatch(const Job& job, std::ostream& out) {
  if (job.command == "reconstruct") return cmd_reconstruct(job, out);
  if (job.command == "dualize") return cmd_dualize(job, out);
  if (job.command == "info") return cmd_info(job, out);
  return cmd_check(job, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coalgebroids, bialgebroids and Hopf algebroids over a finite-dimensional algebra"};
  app.name(args.empty() ? "hopfalg" : args.front());
  app.require_subcommand(1);
  Job job;
  app.add_option("--field", job.field, "Override the field of the input: gf:P or q");
  app.add_option("--seed", job.seed, "Seed for dual-basis choices and randomized checks")->capture_default_str();
  app.add_option("--roundtrip-rank", job.roundtrip_rank, "Largest number of summands in round-trip direct sums")
      ->capture_default_str()
      ->check(CLI::Range(1, 8));
  app.add_flag("--skip-roundtrip", job.skip_roundtrip, "Skip the round-trip spot check");
  app.add_option("--report", job.report, "Report format on stdout")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  const std::pair<const char*, const char*> commands[] = {
      {"reconstruct", "Build the Coend of a presentation and its Hopf algebroid structure"},
      {"verify", "Check every axiom of the algebroid stored in a \"coend\" section"},
      {"check-coalgebroid", "Check the coalgebroid axioms of a \"coend\" section"},
      {"check-bialgebroid", "Check the coalgebroid and bialgebroid axioms of a \"coend\" section"},
      {"dualize", "Compute left and right duals of every module"},
      {"info", "Summarize an input file"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", job.input, "Input JSON file")->required();
    if (std::string(name) != "info") sub->add_option("-o,--output", job.output, "Write the output JSON here (- for stdout)");
    sub->callback([&job, name = std::string(name)] { job.command = name; });
  }

  std::vector<const char*> argv;
  argv.push_back(args.empty() ? "hopfalg" : args.front().c_str());
  for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return dispatch(job, out);
  } catch (const Failure& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const NotProjective& e) {
    err << "not projective: " << e.what() << "\n";
    return kNotProjective;
  } catch (const NoAntipode& e) {
    err << "no antipode: " << e.what() << "\n";
    return kNoAntipode;
  } catch (const NoOppositeAntipode& e) {
    err << "no opposite antipode: " << e.what() << "\n";
    return kNoOppositeAntipode;
  } catch (const IllDefined& e) {
    err << "ill-defined: " << e.what() << "\n";
    return kIllDefined;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hopfalg::cli
