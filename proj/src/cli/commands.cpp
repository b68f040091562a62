#include <chrono>
#include <deque>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "kuifje/cli/cli.hpp"
#include "kuifje/cli/formats.hpp"
#include "kuifje/errors.hpp"
#include "kuifje/lang/classify.hpp"
#include "kuifje/lang/parser.hpp"
#include "kuifje/lang/printer.hpp"
#include "kuifje/oracle/oracle.hpp"
#include "kuifje/refine/refine.hpp"

namespace kuifje {

using Json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

FamilyOptions parse_family_spec(const std::string& spec) {
  FamilyOptions o;
  o.random = 50;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw SyntaxError({}, "family option '" + item + "' is not key=value");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(val, &used);
      if (used != val.size() || v < 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw SyntaxError({}, "family option '" + key + "' needs a nonnegative integer");
    }
    if (key == "k")
      o.max_subset = static_cast<int>(v);
    else if (key == "random")
      o.random = static_cast<int>(v);
    else if (key == "seed")
      o.seed = static_cast<std::uint64_t>(v);
    else if (key == "max")
      o.max_entries = static_cast<std::size_t>(v);
    else
      throw SyntaxError({}, "unknown family option '" + key + "'");
  }
  return o;
}

namespace {

struct InputFile {
  std::string path;
  std::string text;
};

// Shared state of one invocation.
struct Session {
  explicit Session(std::ostream& o) : out(o) {}

  std::ostream& out;
  bool json = false;
  bool timings = false;
  int loop_budget = default_loop_budget();
  std::string family = "";
  std::vector<std::string> loss_files, witness_files;
  std::string ext;
  std::vector<std::string> argv;
  std::deque<InputFile> inputs;
  Json report;

  const InputFile& load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    inputs.push_back({path, ss.str()});
    return inputs.back();
  }
};

// Prefixes positioned errors with the file they came from.
template <typename F>
auto in_file(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SyntaxError& e) {
    throw SyntaxError({}, path + ":" + e.what());
  } catch (const TypeError& e) {
    throw TypeError({}, path + ":" + e.what());
  }
}

CtxPtr ctx_of(const std::optional<std::vector<Variable>>& decls) {
  return make_ctx(decls ? VarContext(*decls) : VarContext());
}

TypedProgram load_program(Session& s, const std::string& path, StmtPtr* source = nullptr) {
  const InputFile& f = s.load(path);
  return in_file(path, [&] {
    ProgramFile pf = parse_program_file(f.text);
    if (source) *source = pf.body;
    return typecheck(pf.body, ctx_of(pf.context));
  });
}

StmtPtr load_rep(Session& s, const std::string& path) {
  const InputFile& f = s.load(path);
  return in_file(path, [&] { return parse_program_file(f.text).body; });
}

CheckedDatatype load_datatype(Session& s, const std::string& path) {
  const InputFile& f = s.load(path);
  return in_file(path, [&] { return check_datatype(parse_datatype(f.text)); });
}

ProgramContext load_context(Session& s, const std::string& path) {
  const InputFile& f = s.load(path);
  return in_file(path, [&] { return parse_context(f.text); });
}

LossFunction load_loss(Session& s, const std::string& path, const AtomSet& atoms) {
  const InputFile& f = s.load(path);
  return in_file(path, [&] { return parse_loss(f.text, atoms); });
}

Distribution load_prior(Session& s, const std::string& arg, const CtxPtr& ctx) {
  std::ifstream probe(arg);
  if (!probe) return in_file("--prior", [&] { return parse_prior(arg, ctx); });
  const InputFile& f = s.load(arg);
  return in_file(arg, [&] { return parse_prior(f.text, ctx); });
}

FamilySpec family_spec(Session& s, const AtomSet& atoms) {
  FamilySpec spec;
  spec.options = parse_family_spec(s.family);
  for (const auto& p : s.witness_files)
    spec.extra.push_back({load_loss(s, p, atoms), Provenance::Witness, p});
  for (const auto& p : s.loss_files) spec.extra.push_back({load_loss(s, p, atoms), Provenance::User, p});
  return spec;
}

RefineOptions refine_options(Session& s) {
  RefineOptions o;
  o.wpl.loop_budget = s.loop_budget;
  if (!s.ext.empty()) o.extension = in_file("--ext", [&] { return VarContext(parse_decls(s.ext)); });
  return o;
}

Json loss_json(const LossFunction& l) {
  Json g = Json::array();
  for (const auto& p : l.gens()) g.push_back(format_predicate(p));
  return Json{{"context", l.ctx().str()}, {"generators", g}, {"literal", format_loss(l)}};
}

Json loops_json(const std::vector<LoopStatus>& loops) {
  Json a = Json::array();
  for (std::size_t i = 0; i < loops.size(); ++i)
    a.push_back({{"site", i}, {"status", loops[i].converged ? "Converged" : "Truncated"}, {"terms", loops[i].terms}});
  return a;
}

std::string indent(const std::string& text, const std::string& pad) {
  std::string out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out += pad + line + "\n";
  return out;
}

// Generators as a dense table when the context is small, else sparse lines.
std::string loss_table(const LossFunction& l) {
  std::ostringstream out;
  const std::size_t n = l.ctx().state_count();
  out << "over [" << l.ctx().str() << "], " << l.gens().size() << " generator" << (l.gens().size() == 1 ? "" : "s")
      << "\n";
  if (n <= 16) {
    std::vector<std::string> head{"state"};
    for (std::size_t i = 0; i < l.gens().size(); ++i) head.push_back("g" + std::to_string(i + 1));
    std::vector<std::vector<std::string>> rows{head};
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::string> r{l.ctx().state_str(x)};
      for (const auto& g : l.gens()) r.push_back(g[x].str());
      rows.push_back(r);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
      out << " ";
      for (std::size_t c = 0; c < r.size(); ++c) out << " " << std::setw(static_cast<int>(width[c])) << r[c];
      out << "\n";
    }
  } else {
    for (std::size_t i = 0; i < l.gens().size(); ++i) out << "  g" << i + 1 << ": " << format_predicate(l.gens()[i]) << "\n";
  }
  return out.str();
}

std::string loops_text(const std::vector<LoopStatus>& loops) {
  std::string out;
  for (std::size_t i = 0; i < loops.size(); ++i)
    out += "loop " + std::to_string(i) + ": " + loops[i].str() + "\n";
  return out;
}

Json verdict_json(const Verdict& v) {
  Json j{{"kind", v.kind_name()}, {"checked", v.checked}};
  if (!v.where.empty()) j["where"] = v.where;
  if (v.inconclusive()) j["reason"] = v.reason;
  if (v.holds()) j["note"] = "bounded check: sound for the listed family only";
  if (v.fails()) {
    j["witness"] = {{"loss_label", v.witness_loss->label},
                    {"provenance", provenance_name(v.witness_loss->provenance)},
                    {"loss", loss_json(v.witness_loss->loss)},
                    {"distribution", format_distribution(*v.witness_distribution)},
                    {"lhs", v.lhs.str()},
                    {"rhs", v.rhs.str()},
                    {"certified", certify(v)}};
  }
  return j;
}

std::string verdict_text(const Verdict& v, const std::string& pad = "") {
  std::ostringstream out;
  out << pad << "verdict: " << v.kind_name();
  if (!v.where.empty()) out << " [" << v.where << "]";
  out << "\n";
  if (v.holds()) out << pad << "  checked " << v.checked << " losses (sound for this family only)\n";
  if (v.inconclusive()) out << pad << "  reason: " << v.reason << "\n";
  if (v.fails()) {
    out << pad << "  witness loss (" << provenance_name(v.witness_loss->provenance) << ", " << v.witness_loss->label
        << "):\n"
        << indent(format_loss(v.witness_loss->loss), pad + "    ") << pad
        << "  witness prior: " << format_distribution(*v.witness_distribution) << "\n"
        << pad << "  left = " << v.lhs.str() << " > right = " << v.rhs.str() << "\n"
        << pad << "  certified: " << (certify(v) ? "yes" : "NO") << "\n";
  }
  return out.str();
}

int verdict_exit(const Verdict& v) {
  if (v.fails()) return kExitFails;
  if (v.inconclusive()) return kExitInconclusive;
  return kExitOk;
}

std::string program_summary(const TypedProgram& t) {
  std::ostringstream out;
  out << "[" << t.pre->str() << "] -> [" << t.post->str() << "], " << t.node_count << " nodes, "
      << (classify_hidden(*t.root->source) ? "hidden" : "not hidden") << ", "
      << (classify_choiceless(*t.root->source) ? "choiceless" : "not choiceless");
  return out.str();
}

// --- commands -------------------------------------------------------------

int cmd_check(Session& s, const std::vector<std::string>& files, const std::string& datatype) {
  std::optional<CheckedDatatype> dt;
  if (!datatype.empty()) dt = load_datatype(s, datatype);
  Json results = Json::array();
  for (const auto& path : files) {
    const InputFile& f = s.load(path);
    Json r{{"file", path}};
    std::string line = in_file(path, [&]() -> std::string {
      ParsedFile parsed = parse_any(f.text);
      if (auto* pf = std::get_if<ProgramFile>(&parsed)) {
        TypedProgram t = typecheck(pf->body, ctx_of(pf->context));
        r["kind"] = "program";
        r["pre"] = t.pre->str();
        r["post"] = t.post->str();
        r["hidden"] = classify_hidden(*pf->body);
        r["choiceless"] = classify_choiceless(*pf->body);
        return "program " + program_summary(t);
      }
      if (auto* d = std::get_if<Datatype>(&parsed)) {
        CheckedDatatype c = check_datatype(*d);
        r["kind"] = "datatype";
        r["shared"] = c.shared->str();
        r["encapsulated"] = c.encap->str();
        Json ops = Json::array();
        std::string names;
        for (const auto& [n, t] : c.ops) {
          ops.push_back(n);
          names += (names.empty() ? "" : ", ") + n;
        }
        r["ops"] = ops;
        return "datatype shared [" + c.shared->str() + "] encapsulated [" + c.encap->str() + "] ops " + names;
      }
      const auto& c = std::get<ProgramContext>(parsed);
      r["kind"] = "context";
      if (!dt) {
        r["typechecked"] = false;
        return "context (parsed; pass --datatype to typecheck)";
      }
      TypedProgram t = check_context(c, *dt);
      r["typechecked"] = true;
      r["client"] = t.pre->str();
      return "context over [" + t.pre->str() + "]";
    });
    results.push_back(r);
    if (!s.json) s.out << path << ": ok: " << line << "\n";
  }
  s.report["results"] = results;
  return kExitOk;
}

int cmd_wpl(Session& s, const std::string& file, const std::string& post_file, const std::string& prior) {
  TypedProgram t = load_program(s, file);
  LossFunction post = load_loss(s, post_file, t.atoms);
  RefineOptions ro = refine_options(s);
  WplOptions wo;
  wo.loop_budget = s.loop_budget;
  WplResult r = wpl_extended(t, post, ro.extension, wo);

  Json res{{"pre", loss_json(r.pre)}, {"loops", loops_json(r.loops)}, {"truncated", r.truncated()}};
  std::optional<ExtRat> value;
  if (!prior.empty()) {
    Distribution d = load_prior(s, prior, r.pre.ctx_ptr());
    value = eval_loss(r.pre, d);
    res["prior"] = format_distribution(d);
    res["value"] = value->str();
  }
  s.report["results"] = res;
  if (!s.json) {
    s.out << "pre-loss " << loss_table(r.pre) << loops_text(r.loops);
    if (r.truncated()) s.out << "note: truncated loops make this a lower bound in the refinement order\n";
    if (value) s.out << "value at prior: " << value->str() << "\n";
  }
  return kExitOk;
}

int cmd_refine(Session& s, const std::string& fp, const std::string& fq) {
  TypedProgram p = load_program(s, fp);
  TypedProgram q = load_program(s, fq);
  RefineOptions ro = refine_options(s);
  AtomSet atoms = p.atoms;
  atoms.insert(q.atoms.begin(), q.atoms.end());
  FamilySpec spec = family_spec(s, atoms);
  CtxPtr post = ro.extension.empty() ? p.post : make_ctx(p.post->concat(ro.extension));
  TestFamily fam = spec.build(post);
  Verdict v = program_refines(p, q, fam, ro);
  s.report["results"] = {{"family_size", fam.size()}, {"verdict", verdict_json(v)}};
  if (!s.json) s.out << fp << " ⊑ " << fq << "\n" << verdict_text(v);
  return verdict_exit(v);
}

int cmd_datatype(Session& s, const std::string& fa, const std::string& fc, const std::vector<std::string>& ctxs) {
  CheckedDatatype a = load_datatype(s, fa);
  CheckedDatatype c = load_datatype(s, fc);
  std::vector<ProgramContext> contexts;
  AtomSet atoms = a.init.atoms;
  atoms.insert(c.init.atoms.begin(), c.init.atoms.end());
  for (const auto& p : ctxs) contexts.push_back(load_context(s, p));
  FamilySpec spec = family_spec(s, atoms);
  Verdict v = data_refines(a, c, contexts, spec, refine_options(s));
  if (v.where.rfind("context ", 0) == 0) {
    std::size_t i = std::stoul(v.where.substr(8)) - 1;
    if (i < ctxs.size()) v.where = ctxs[i];
  }
  s.report["results"] = {{"contexts", ctxs}, {"verdict", verdict_json(v)}};
  if (!s.json) s.out << fa << " ⊑ " << fc << " (data refinement)\n" << verdict_text(v);
  return verdict_exit(v);
}

int cmd_simulate(Session& s, bool backward, const std::string& fa, const std::string& fc, const std::string& frep) {
  CheckedDatatype a = load_datatype(s, fa);
  CheckedDatatype c = load_datatype(s, fc);
  StmtPtr rep = load_rep(s, frep);
  AtomSet atoms = a.init.atoms;
  atoms.insert(c.init.atoms.begin(), c.init.atoms.end());
  FamilySpec spec = family_spec(s, atoms);
  SimulationOptions so;
  so.refine = refine_options(s);
  SimulationReport r = in_file(frep, [&] {
    return backward ? check_backward_simulation(a, c, rep, spec, so) : check_forward_simulation(a, c, rep, spec, so);
  });
  Json squares = Json::array();
  for (const auto& sq : r.squares) {
    Json j{{"name", sq.name}, {"lhs", sq.lhs}, {"rhs", sq.rhs}, {"verdict", verdict_json(sq.verdict)}};
    if (sq.converse) j["converse"] = verdict_json(*sq.converse);
    j["equality"] = sq.equality();
    squares.push_back(j);
  }
  s.report["results"] = {{"direction", backward ? "backward" : "forward"},
                         {"rep", print_inline(*rep)},
                         {"gate", r.gate},
                         {"gate_passed", r.gate_passed},
                         {"squares", squares},
                         {"verdict", verdict_json(r.verdict)}};
  if (!s.json) {
    s.out << (backward ? "backward" : "forward") << " simulation, rep = " << print_inline(*rep) << "\n";
    s.out << "gate (" << r.gate << "): " << (r.gate_passed ? "passed" : "FAILED") << "\n";
    for (const auto& sq : r.squares) {
      s.out << "square " << sq.name << ": " << sq.lhs << "  ⊑  " << sq.rhs << "\n";
      s.out << verdict_text(sq.verdict, "  ");
      if (sq.converse) s.out << "  converse: " << sq.converse->kind_name() << (sq.equality() ? " (equality)" : "") << "\n";
    }
    s.out << verdict_text(r.verdict);
  }
  return verdict_exit(r.verdict);
}

int cmd_oracle(Session& s, const std::string& file, const std::string& prior, const std::string& post_file,
               bool exhaustive) {
  TypedProgram t = load_program(s, file);
  LossFunction post = load_loss(s, post_file, t.atoms);
  Distribution d = load_prior(s, prior, t.pre);
  ExtRat greedy = min_bayes_risk(t, d, post);
  WplOptions wo;
  wo.loop_budget = s.loop_budget;
  ExtRat via_wpl = eval_loss(wpl(t, post, wo).pre, d);
  Json res{{"prior", format_distribution(d)}, {"min_bayes_risk", greedy.str()}, {"wpl_value", via_wpl.str()},
           {"agree", greedy == via_wpl}};
  std::optional<ExtRat> full;
  if (exhaustive) {
    full = min_bayes_risk_exhaustive(t, d, post);
    res["exhaustive"] = full->str();
    res["strategies"] = enumerate_strategies(t, d).size();
  }
  s.report["results"] = res;
  if (!s.json) {
    s.out << "min Bayes risk (per-history choice): " << greedy.str() << "\n";
    if (full) s.out << "min Bayes risk (all strategies):    " << full->str() << "\n";
    s.out << "wpl evaluated at the prior:          " << via_wpl.str() << (greedy == via_wpl ? "  (agrees)" : "  (DIFFERS)")
          << "\n";
  }
  return greedy == via_wpl && (!full || *full == greedy) ? kExitOk : kExitInconclusive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s(out);
  s.argv = args;
  CLI::App app{"Analyzer for KuifjeNonDet programs: weakest pre-loss, refinement and simulation checks.", "kuifje"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kuifje 1.0");

  auto common = [&](CLI::App* c, bool family) {
    c->add_flag("--json", s.json, "Machine-readable report on stdout");
    c->add_flag("--timings", s.timings, "Include wall-clock timings");
    c->add_option("--loop-budget", s.loop_budget, "Terms summed per loop (default: $KUIFJE_LOOP_BUDGET or 64)")
        ->check(CLI::PositiveNumber);
    if (family) {
      c->add_option("--family", s.family, "Test family: k=2,random=50,seed=1,max=20000");
      c->add_option("--loss", s.loss_files, "Extra post-loss file for the family (repeatable)");
      c->add_option("--witness", s.witness_files, "Known witness loss file, checked first (repeatable)");
    }
  };

  std::vector<std::string> check_files;
  std::string check_datatype_file;
  auto* check = app.add_subcommand("check", "Parse and typecheck programs, datatypes and contexts");
  check->add_option("files", check_files, "Input files")->required();
  check->add_option("--datatype", check_datatype_file, "Datatype used to typecheck contexts");
  common(check, false);

  std::string wpl_file, wpl_post, wpl_prior;
  auto* wplc = app.add_subcommand("wpl", "Weakest pre-loss of a program");
  wplc->add_option("program", wpl_file, "Program file")->required();
  wplc->add_option("--post", wpl_post, "Post-loss file")->required();
  wplc->add_option("--ext", s.ext, "Correlated extension variables, e.g. 'z:{0,1}'");
  wplc->add_option("--prior", wpl_prior, "Evaluate the pre-loss at this prior (file or inline spec)");
  common(wplc, false);

  std::string rp, rq;
  auto* refine = app.add_subcommand("refine", "Check P ⊑ Q on a test family");
  refine->add_option("P", rp, "Program file")->required();
  refine->add_option("Q", rq, "Program file")->required();
  refine->add_option("--ext", s.ext, "Correlated extension variables");
  common(refine, true);

  std::string da, dc;
  std::vector<std::string> contexts;
  auto* dtc = app.add_subcommand("datatype", "Check data refinement D_A ⊑ D_C through contexts");
  dtc->add_option("A", da, "Abstract datatype file")->required();
  dtc->add_option("C", dc, "Concrete datatype file")->required();
  dtc->add_option("--context", contexts, "Context file (repeatable)")->required();
  common(dtc, true);

  std::string sa, sc, srep;
  bool forward = false, backward = false;
  auto* sim = app.add_subcommand("simulate", "Check a forward or backward simulation");
  auto* fw = sim->add_flag("--forward", forward, "rep maps abstract to concrete state; must be hidden");
  auto* bw = sim->add_flag("--backward", backward, "rep maps concrete to abstract state; must be choiceless");
  fw->excludes(bw);
  sim->add_option("A", sa, "Abstract datatype file")->required();
  sim->add_option("C", sc, "Concrete datatype file")->required();
  sim->add_option("--rep", srep, "Simulation program file")->required();
  common(sim, true);

  std::string of, oprior, opost;
  bool exhaustive = false;
  auto* orc = app.add_subcommand("oracle", "Minimum Bayes risk by forward enumeration (loop-free programs)");
  orc->add_option("program", of, "Program file")->required();
  orc->add_option("--prior", oprior, "Prior (file or inline spec, e.g. 'uniform')")->required();
  orc->add_option("--post", opost, "Post-loss file")->required();
  orc->add_flag("--exhaustive", exhaustive, "Also enumerate every deterministic strategy");
  common(orc, false);

  std::vector<std::string> storage{"kuifje"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSyntax;
  }
  if (backward == forward && sim->parsed()) {
    err << "simulate: pass exactly one of --forward or --backward\n";
    return kExitSyntax;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  std::string command;
  try {
    if (check->parsed()) {
      command = "check";
      code = cmd_check(s, check_files, check_datatype_file);
    } else if (wplc->parsed()) {
      command = "wpl";
      code = cmd_wpl(s, wpl_file, wpl_post, wpl_prior);
    } else if (refine->parsed()) {
      command = "refine";
      code = cmd_refine(s, rp, rq);
    } else if (dtc->parsed()) {
      command = "datatype";
      code = cmd_datatype(s, da, dc, contexts);
    } else if (sim->parsed()) {
      command = "simulate";
      code = cmd_simulate(s, backward, sa, sc, srep);
    } else if (orc->parsed()) {
      command = "oracle";
      code = cmd_oracle(s, of, oprior, opost, exhaustive);
    }
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return kExitType;
  } catch (const ContextMismatch& e) {
    err << "type error: " << e.what() << "\n";
    return kExitType;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitType;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSyntax;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (s.json) {
    Json inputs = Json::array();
    for (const auto& f : s.inputs) inputs.push_back({{"path", f.path}, {"sha256", sha256_hex(f.text)}});
    Json root{{"schema_version", kReportSchemaVersion},
              {"command", command},
              {"argv", s.argv},
              {"exit_code", code},
              {"inputs", inputs},
              {"results", s.report["results"]}};
    if (s.timings) root["timings"] = {{"total_ms", ms}};
    out << root.dump(2) << "\n";
  } else if (s.timings) {
    out << "time: " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }
  return code;
}

}  // namespace kuifje
