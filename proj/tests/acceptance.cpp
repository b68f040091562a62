// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "kuifje/cli/cli.hpp"
#include "kuifje/cli/formats.hpp"
#include "kuifje/lang/datatype.hpp"
#include "kuifje/refine/refine.hpp"
#include "kuifje/wpl/wpl.hpp"
#include "support/laws.hpp"
#include "support/util.hpp"

using namespace kuifje;
using testutil::corpus;
using testutil::slurp;

namespace {

// Time limits in seconds.
constexpr double kLimitGolden = 1;
constexpr double kLimitDatabase = 30;
constexpr double kLimitRandomBit = 10;
constexpr double kLimitCounterexample = 10;  // per datatype pair
constexpr double kLimitPrintLaws = 10;
constexpr double kLimitLaws = 300;
constexpr double kLimitDuality = 300;
constexpr double kLimitLoops = 10;

// Case counts and seeds for the randomized criteria.
constexpr int kLawCases = 100;
constexpr std::uint64_t kLawSeed = 20261016;
constexpr int kDualityCases = 200;
constexpr std::uint64_t kDualitySeed = 7;
constexpr int kExhaustiveCases = 100;
constexpr std::uint64_t kExhaustiveSeed = 11;
constexpr int kFamilyRandom = 50;
constexpr std::uint64_t kFamilySeed = 1;
constexpr int kMaxBudget = 20;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

CheckedDatatype load_dt(const std::string& rel) { return check_datatype(parse_datatype(slurp(corpus(rel)))); }
ProgramContext load_ctx(const std::string& rel) { return parse_context(slurp(corpus(rel))); }
StmtPtr load_rep(const std::string& rel) { return parse_program_file(slurp(corpus(rel))).body; }

FamilySpec standard_spec() {
  FamilySpec s;
  s.options.max_subset = 2;
  s.options.random = kFamilyRandom;
  s.options.seed = kFamilySeed;
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one criterion, timing each part against its own limit.
bool criterion(int number, const char* title, const std::vector<std::pair<double, std::function<void(Check&)>>>& parts) {
  Check c;
  std::ostringstream times;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      parts[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    c.require(t < parts[i].first, "time limit");
    times << (i ? ", " : "") << std::fixed << std::setprecision(2) << t << " s < " << std::setprecision(0)
          << parts[i].first << " s";
  }
  std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " (" << times.str() << ")"
            << c.detail.str() << std::endl;
  return c.ok;
}

// Parity leak after a high-bit print, through the wpl command.
void golden(Check& c) {
  std::ostringstream out, err;
  int code = run_cli({"wpl", corpus("parity_leak/program.kf"), "--post", corpus("parity_leak/post.loss"), "--json"},
                     out, err);
  c.require(code == kExitOk, "wpl exit code");
  auto j = nlohmann::json::parse(out.str());
  auto pre = parse_loss(j["results"]["pre"]["literal"].get<std::string>());
  auto expected = parse_loss(slurp(corpus("parity_leak/expected.loss")));
  c.require(loss_equal(pre, expected), "pre-loss equals the four-generator MIN");
  c.detail << " " << pre.gens().size() << " generators";
}

void database(Check& c) {
  auto abstract = load_dt("database/abstract.kdt");
  auto offset = load_dt("database/offset_search.kdt");
  auto context = load_ctx("database/context.kctx");
  auto pa = composite(context, abstract);
  auto pc = composite(context, offset);
  auto post = parse_loss(slurp(corpus("database/post.loss")), pa.atoms);
  auto prior = parse_prior(slurp(corpus("database/prior")), pa.pre);
  const ExtRat va = eval_loss(wpl(pa, post).pre, prior);
  const ExtRat vc = eval_loss(wpl(pc, post).pre, prior);
  c.detail << " abstract " << va.str() << ", offset search " << vc.str();
  c.require(va >= ExtRat(Rational(1, 2)), "abstract value >= 1/2");
  c.require(vc <= ExtRat(Rational(3, 8)), "offset search value <= 3/8");

  FamilySpec spec;
  spec.extra.push_back({post, Provenance::Witness, "database/post.loss"});
  auto v = data_refines(abstract, offset, {context}, spec);
  c.detail << ", data refinement " << v.kind_name();
  c.require(v.fails() && certify(v), "data refinement fails with a certified witness");
  auto found = data_refines(abstract, offset, {context}, FamilySpec{});
  c.detail << ", default family " << found.kind_name();
  c.require(found.fails() && certify(found), "default family finds a certified witness");
}

void random_bit(Check& c) {
  auto a = load_dt("random_bit/abstract.kdt");
  auto k = load_dt("random_bit/concrete.kdt");
  auto rep = load_rep("random_bit/rep.kf");
  auto fw = check_forward_simulation(a, k, rep, standard_spec());
  c.require(fw.gate_passed && fw.verdict.holds(), "forward simulation holds");
  c.require(fw.squares.size() == 3, "three forward squares");
  for (const auto& sq : fw.squares) c.require(sq.equality(), "forward square " + sq.name + " is an equality");
  auto bw = check_backward_simulation(k, a, rep, standard_spec());
  c.require(bw.gate_passed && bw.verdict.holds(), "backward simulation holds");
  c.require(bw.squares.size() == 3, "three backward squares");
  for (const auto& sq : bw.squares) c.require(sq.equality(), "backward square " + sq.name + " is an equality");
  auto ctx = load_ctx("random_bit/context.kctx");
  auto ak = data_refines(a, k, {ctx}, standard_spec());
  auto ka = data_refines(k, a, {ctx}, standard_spec());
  c.require(ak.holds() && ka.holds(), "data refinement holds both ways");
  c.detail << " forward " << fw.verdict.kind_name() << ", backward " << bw.verdict.kind_name() << ", data "
           << ak.kind_name() << "/" << ka.kind_name() << " on " << ak.checked << " losses";
}

void counterexample(Check& c, const std::string& dir, bool backward, const char* gate) {
  auto a = load_dt(dir + "/abstract.kdt");
  auto k = load_dt(dir + "/concrete.kdt");
  auto rep = load_rep(dir + "/rep.kf");
  auto sim = backward ? check_backward_simulation(a, k, rep, standard_spec())
                      : check_forward_simulation(a, k, rep, standard_spec());
  for (const auto& sq : sim.squares) c.require(sq.verdict.holds(), dir + " square " + sq.name + " holds");
  c.require(sim.squares.size() == 3, dir + " three squares");
  c.require(sim.gate == gate && !sim.gate_passed, dir + " " + gate + " gate rejects the representation");
  c.require(sim.verdict.inconclusive(), dir + " simulation is inconclusive");
  auto v = data_refines(a, k, {load_ctx(dir + "/context.kctx")}, standard_spec());
  c.require(v.fails() && certify(v), dir + " data refinement fails with a certified witness");
  c.detail << " " << dir << ": squares hold, gate " << gate << " " << sim.verdict.kind_name() << ", data "
           << v.kind_name();
  if (v.fails()) c.detail << " (" << v.lhs.str() << " > " << v.rhs.str() << ")";
}

void print_laws(Check& c) {
  auto ctx = testutil::ctx_of("b:{0,1}");
  auto fam = standard_family(ctx);
  auto skip = testutil::typed("skip", ctx);
  auto pb = testutil::typed("print b", ctx);
  auto twice = testutil::typed("print b; print b", ctx);
  auto pnot = testutil::typed("print not b", ctx);
  c.require(program_refines(pb, skip, fam).holds(), "print b ⊑ skip");
  auto leak = program_refines(skip, pb, fam);
  c.require(leak.fails() && certify(leak), "skip ⋢ print b");
  c.require(program_refines(twice, pb, fam).holds(), "print b; print b ⊑ print b");
  c.require(program_refines(pb, pnot, fam).holds(), "print b ⊑ print ¬b");
  c.require(program_refines(pnot, pb, fam).holds(), "print ¬b ⊑ print b");
  c.detail << " family of " << fam.size() << " losses";
}

void require_report(Check& c, const testgen::LawReport& r, int min_cases) {
  c.require(r.cases >= min_cases && r.ok(), r.name + ": " + std::to_string(r.failures) + "/" +
                                                 std::to_string(r.cases) + " failed " + r.first_failure);
}

void laws(Check& c) {
  int total = 0;
  for (const auto& name : testgen::law_names()) {
    auto r = testgen::run_law(name, kLawSeed, kLawCases);
    require_report(c, r, kLawCases);
    total += r.cases;
  }
  c.detail << " " << testgen::law_names().size() << " laws, " << total << " cases";
}

void duality(Check& c) {
  auto d = testgen::run_duality(kDualitySeed, kDualityCases);
  require_report(c, d, kDualityCases);
  auto g = testgen::run_greedy_vs_exhaustive(kExhaustiveSeed, kExhaustiveCases);
  require_report(c, g, kExhaustiveCases);
  c.detail << " duality " << d.cases - d.failures << "/" << d.cases << ", exhaustive " << g.cases - g.failures << "/"
           << g.cases;
}

void loops(Check& c) {
  auto ctx = testutil::ctx_of("c:{0,1}");
  auto p = parse_program_file(slurp(corpus("loops/geometric.kf")));
  auto t = typecheck(p.body, make_ctx(VarContext(*p.context)));
  auto one = parse_loss(slurp(corpus("loops/one.loss")));
  auto at_one = Distribution::point(t.pre, 1);
  WplOptions o;
  o.loop_budget = kMaxBudget;
  o.record_site = 0;
  auto r = wpl(t, one, o);
  c.require(r.partial_sums.size() == kMaxBudget + 1, "partial sums recorded");
  for (std::size_t n = 0; n < r.partial_sums.size(); ++n) {
    const ExtRat bound(Rational(1) - Rational(1, Integer(1) << n));
    const auto& s = r.partial_sums[n];
    if (n > 0) c.require(loss_refines(r.partial_sums[n - 1], s), "S_" + std::to_string(n) + " increasing");
    c.require(loss_refines(loss_scale(bound, one), s), "bound below S_" + std::to_string(n));
    c.require(eval_loss(s, at_one) == bound, "S_" + std::to_string(n) + " at c=1");
  }
  for (int n = 1; n <= kMaxBudget; ++n) {
    WplOptions b;
    b.loop_budget = n;
    auto rn = wpl(t, one, b);
    c.require(rn.truncated() && rn.loops[0].str() == "Truncated(" + std::to_string(n) + ")",
              "budget " + std::to_string(n) + " reports Truncated");
    c.require(loss_equal(rn.pre, r.partial_sums[static_cast<std::size_t>(n)]), "budget " + std::to_string(n) + " pre");
  }
  c.detail << " S_0..S_" << kMaxBudget << " checked, S_" << kMaxBudget << "(c=1) = "
           << eval_loss(r.partial_sums.back(), at_one).str();
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1, "parity leak golden pre-loss", {{kLimitGolden, golden}});
  ok &= criterion(2, "database with a random offset still leaks", {{kLimitDatabase, database}});
  ok &= criterion(3, "random bit generator simulations", {{kLimitRandomBit, random_bit}});
  ok &= criterion(4, "counterexample fidelity",
                  {{kLimitCounterexample, [](Check& c) { counterexample(c, "leaky_print", false, "hidden"); }},
                   {kLimitCounterexample, [](Check& c) { counterexample(c, "masked_choice", true, "choiceless"); }}});
  ok &= criterion(5, "print laws", {{kLimitPrintLaws, print_laws}});
  ok &= criterion(6, "healthiness property suite", {{kLimitLaws, laws}});
  ok &= criterion(7, "oracle duality", {{kLimitDuality, duality}});
  ok &= criterion(8, "loop soundness", {{kLimitLoops, loops}});
  return ok ? 0 : 1;
}
