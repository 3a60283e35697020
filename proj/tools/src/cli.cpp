#include "ordamalg_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "ordamalg/amalgamate.hpp"
#include "ordamalg/dot_export.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/error.hpp"
#include "ordamalg/fraisse.hpp"
#include "ordamalg/oracle.hpp"
#include "ordamalg/registry.hpp"
#include "ordamalg/text_format.hpp"

namespace ordamalg::cli {

namespace {

struct ClassOptions {
  std::string spec;
  std::vector<std::string> conditions;
  bool partial = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--class", spec, "class spec, e.g. lo_p, lo_fgac(1,1), po(f:preserving)")->required();
    cmd->add_option("--cond", conditions, "extra condition, e.g. \"iter_eq f 2 1 every\" (repeatable)");
    cmd->add_flag("--partial", partial, "allow partial operations");
  }

  ClassSpec build() const {
    ClassSpec s = parse_class_spec(spec);
    for (const auto& c : conditions) s.conditions.push_back(parse_condition(c));
    s.allow_partial = s.allow_partial || partial;
    return s;
  }
};

// Parse errors already name the file and line.
Structure load_one(const std::string& path) {
  auto doc = read_document_file(path);
  if (doc.structures.size() != 1)
    throw Error(ErrorCode::ParseError, path + ": expected exactly one structure, found " +
                                           std::to_string(doc.structures.size()));
  return doc.structures.front();
}

std::vector<Structure> load_all(const std::string& path) { return read_document_file(path).structures; }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  file << text;
}

std::string describe_signature(const Structure& s) {
  std::string out;
  for (const auto& op : s.ops()) out += " " + op.symbol + ":" + std::string(to_string(op.kind));
  return out.empty() ? " none" : out;
}

std::string maps_of(const Structure& A, const Structure& B, const Structure& D, const EmbeddingMap& e_A,
                    const EmbeddingMap& e_B) {
  return "# A -> D\n" + serialize_map(names_of(A, D, e_A)) + "# B -> D\n" + serialize_map(names_of(B, D, e_B));
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedClass:
    case ErrorCode::ClassNotAmalgamable: return kUnsupported;
    case ErrorCode::ConstructionFailed: return kInternal;
    default: return kInputError;
  }
}

int cmd_check(const std::vector<std::string>& files, const std::string& spec_text,
              const std::vector<std::string>& conds, bool partial, std::ostream& out) {
  std::optional<ClassSpec> spec;
  if (!spec_text.empty()) {
    ClassOptions o{spec_text, conds, partial};
    spec = o.build();
  }
  int code = kOk;
  for (const auto& path : files) {
    for (const Structure& s : load_all(path)) {
      const ValidationReport report = validate(s);
      if (!report.ok()) {
        out << path << ": invalid " << s.name() << ": " << report.summary() << "\n";
        code = kInputError;
        continue;
      }
      out << path << ": ok " << s.name() << " (" << s.size() << " elements, "
          << (s.is_linear() ? "linear" : "partial") << ", ops:" << describe_signature(s) << ")\n";
      if (spec) {
        const std::string why = membership_failure(s, *spec);
        if (why.empty()) {
          out << path << ": " << s.name() << " is in class " << spec->text << "\n";
        } else {
          out << path << ": " << s.name() << " is not in class " << spec->text << ": " << why << "\n";
          code = kInputError;
        }
      }
    }
  }
  return code;
}

int cmd_amalgamate(const ClassOptions& cls, const std::string& a_path, const std::string& b_path,
                   const std::string& output, bool emit, std::ostream& out) {
  const ClassSpec spec = cls.build();
  const Structure A = load_one(a_path);
  const Structure B = load_one(b_path);
  const AmalgamationTriple t = intersect_to_triple(A, B);
  const AmalgamResult r = amalgamate(t, spec);
  std::string text = serialize(r.D);
  if (emit || !r.b_names.empty()) text += maps_of(t.A, t.B, r.D, r.e_A, r.e_B);
  write_output(output, text, out);
  return kOk;
}

int cmd_oracle(const ClassOptions& cls, const std::string& mode, int max_extra, unsigned threads,
               const std::string& a_path, const std::string& b_path, std::ostream& out) {
  const ClassSpec spec = cls.build();
  const AmalgamationTriple t = intersect_to_triple(load_one(a_path), load_one(b_path));
  SearchOptions options;
  options.threads = threads;
  const OracleVerdict v = mode == "sap" ? strong_amalgam_search(t, spec, options)
                                        : amalgam_search(t, spec, max_extra, options);
  out << "# verdict: " << to_string(v.kind) << "\n";
  out << "# searched: " << v.searched << " candidates (" << v.bounds << ")\n";
  if (!v.found()) return kNotFound;
  out << serialize(*v.D) << maps_of(t.A, t.B, *v.D, v.e_A, v.e_B);
  return kOk;
}

int cmd_counterexample_list(std::ostream& out) {
  for (const auto& name : list_counterexamples()) {
    const auto r = get_counterexample(name);
    out << name << "\t" << to_string(r.claim) << "\t" << r.spec.text
        << (r.spec.allow_partial ? " (partial ops)" : "") << (r.truncated ? "\ttruncated" : "\tfinite")
        << "\t" << r.summary << "\n";
  }
  return kOk;
}

int cmd_counterexample_show(const std::string& name, int level, std::ostream& out) {
  const auto r = get_counterexample(name, level);
  out << "# " << r.name << ": " << r.summary << "\n";
  out << "# claim: " << to_string(r.claim) << " in class " << r.spec.text
      << (r.spec.allow_partial ? " with partial operations" : "") << "\n";
  if (r.truncated) out << "# truncated: " << r.truncation_note << "\n";
  out << serialize(r.triple.A) << serialize(r.triple.B) << serialize(r.triple.C);
  return kOk;
}

int cmd_counterexample_verify(const std::string& name, int level, unsigned threads, std::ostream& out) {
  SearchOptions options;
  options.threads = threads;
  const auto report = verify_counterexample(name, options, level);
  out << report.text << "\n";
  return report.pass ? kOk : kNotFound;
}

int cmd_fraisse(const ClassOptions& cls, std::size_t steps, std::size_t level, const std::string& start,
                std::ostream& out) {
  const ClassSpec spec = cls.build();
  Structure M0;
  if (!start.empty()) {
    M0 = load_one(start);
  } else {
    const auto singles = enumerate_class(spec, 1);
    if (singles.empty()) throw Error(ErrorCode::InvalidArgument, "class " + spec.text + " has no 1-element member");
    M0 = rename(singles.front(), {{singles.front().element(0), "m0"}}).with_name("M");
  }
  const FraisseChain chain = build_chain(M0, spec, level, steps);
  const Structure& last = chain.stages.back();
  out << "# stages:";
  for (const auto& s : chain.stages) out << " " << s.size();
  out << "\n" << serialize(last);

  const ExtensionReport absolute = check_extension_property(last, spec, level);
  out << "# final stage: " << absolute.describe() << "\n";
  if (chain.stages.size() >= 2) {
    const Structure& prev = chain.stages[chain.stages.size() - 2];
    out << "# previous stage into final stage: " << check_extension_into(prev, last, spec, level).describe() << "\n";
  }
  const BoundReport bound = check_generated_size_bound(spec, size_cap(spec));
  out << "# " << bound.describe() << "\n";
  return absolute.pass && bound.pass ? kOk : kNotFound;
}

int cmd_export_dot(const std::string& path, const std::string& output, std::ostream& out) {
  std::string text;
  for (const Structure& s : load_all(path)) text += export_dot(s);
  write_output(output, text, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Amalgamation of ordered structures with unary operations", "ordamalg"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "parse and validate structure files");
  std::vector<std::string> check_files;
  std::string check_class;
  std::vector<std::string> check_conds;
  bool check_partial = false;
  check->add_option("files", check_files, "structure files")->required();
  check->add_option("--class", check_class, "also test class membership");
  check->add_option("--cond", check_conds, "extra condition (repeatable)");
  check->add_flag("--partial", check_partial, "allow partial operations");

  // amalgamate
  auto* amalg = app.add_subcommand("amalgamate", "amalgamate A and B over their common substructure");
  ClassOptions amalg_cls;
  std::string a_path, b_path, amalg_out;
  bool emit = false;
  amalg_cls.attach(amalg);
  amalg->add_option("A", a_path, "first structure file")->required();
  amalg->add_option("B", b_path, "second structure file")->required();
  amalg->add_option("-o,--output", amalg_out, "write D here instead of stdout");
  amalg->add_flag("--emit-embeddings", emit, "always print the embedding maps");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive amalgam search");
  ClassOptions oracle_cls;
  std::string mode = "sap";
  int max_extra = 0;
  unsigned threads = 1;
  oracle_cls.attach(oracle);
  oracle->add_option("--mode", mode, "sap: strong amalgams only; ap: allow identifications")
      ->check(CLI::IsMember({"sap", "ap"}));
  oracle->add_option("--max-extra", max_extra, "fresh elements allowed in ap mode (0..3)");
  oracle->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 64U));
  oracle->add_option("A", a_path, "first structure file")->required();
  oracle->add_option("B", b_path, "second structure file")->required();

  // counterexample
  auto* cex = app.add_subcommand("counterexample", "registered counterexamples");
  cex->require_subcommand(1);
  auto* cex_list = cex->add_subcommand("list", "list entries");
  auto* cex_show = cex->add_subcommand("show", "print an entry's triple A, B, C");
  auto* cex_verify = cex->add_subcommand("verify", "confirm an entry's claim with the oracle");
  std::string cex_name;
  int level = 4;
  for (auto* sub : {cex_show, cex_verify}) {
    sub->add_option("name", cex_name, "entry name")->required();
    sub->add_option("--level", level, "truncation level of the successor examples")->check(CLI::Range(1, 12));
  }
  cex_verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 64U));

  // fraisse
  auto* fraisse = app.add_subcommand("fraisse", "build a chain of extension steps and check it");
  ClassOptions fraisse_cls;
  std::size_t steps = 3;
  std::size_t check_level = 2;
  std::string start;
  fraisse_cls.attach(fraisse);
  fraisse->add_option("--steps", steps, "extension steps");
  fraisse->add_option("--check-level", check_level, "level k of the extension property");
  fraisse->add_option("--start", start, "initial stage (default: a one-element member)");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "render structures as Graphviz");
  std::string dot_file, dot_out;
  dot->add_option("file", dot_file, "structure file")->required();
  dot->add_option("-o,--output", dot_out, "write here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(check_files, check_class, check_conds, check_partial, out);
    if (*amalg) return cmd_amalgamate(amalg_cls, a_path, b_path, amalg_out, emit, out);
    if (*oracle) return cmd_oracle(oracle_cls, mode, max_extra, threads, a_path, b_path, out);
    if (*cex_list) return cmd_counterexample_list(out);
    if (*cex_show) return cmd_counterexample_show(cex_name, level, out);
    if (*cex_verify) return cmd_counterexample_verify(cex_name, level, threads, out);
    if (*fraisse) return cmd_fraisse(fraisse_cls, steps, check_level, start, out);
    if (*dot) return cmd_export_dot(dot_file, dot_out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kInputError;
}

}  // namespace ordamalg::cli
