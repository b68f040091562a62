#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kuifje/cli/cli.hpp"
#include "kuifje/cli/formats.hpp"
#include "support/util.hpp"

using namespace kuifje;
using testutil::corpus;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch file that is removed with the object.
struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& text)
      : path(std::filesystem::temp_directory_path() / ("kuifje_test_" + name)) {
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("check: exit codes") {
  CHECK(run({"check", corpus("random_bit/abstract.kdt"), corpus("random_bit/concrete.kdt")}).code == kExitOk);
  CHECK(run({"check", corpus("random_bit/context.kctx"), "--datatype", corpus("random_bit/concrete.kdt")}).code ==
        kExitOk);
  TempFile guard("guard.kf", "context n:int 0..3\nif n { skip } else { skip }\n");
  auto g = run({"check", guard.str()});
  CHECK(g.code == kExitType);
  CHECK(g.err.find("type error") != std::string::npos);
  TempFile braces("braces.kf", "context n:int 0..3\nif n = 1 { skip \n");
  auto b = run({"check", braces.str()});
  CHECK(b.code == kExitSyntax);
  CHECK(b.err.find(braces.str()) != std::string::npos);
  CHECK(run({"check", "/nonexistent/file.kf"}).code == kExitSyntax);
  CHECK(run({"bogus"}).code == kExitSyntax);
  CHECK(run({"simulate", corpus("random_bit/abstract.kdt"), corpus("random_bit/concrete.kdt"), "--rep",
             corpus("random_bit/rep.kf")})
            .code == kExitSyntax);
}

TEST_CASE("wpl: parity leak table and skip echo") {
  auto r = run({"wpl", corpus("parity_leak/program.kf"), "--post", corpus("parity_leak/post.loss"), "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "wpl");
  CHECK(j["inputs"].size() == 2);
  CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
  auto pre = parse_loss(j["results"]["pre"]["literal"].get<std::string>());
  auto expected = parse_loss(testutil::slurp(corpus("parity_leak/expected.loss")));
  CHECK(loss_equal(pre, expected));

  auto skip = run({"wpl", corpus("print_laws/skip.kf"), "--post", corpus("print_laws/guess.loss"), "--json"});
  auto echoed = parse_loss(Json::parse(skip.out)["results"]["pre"]["literal"].get<std::string>());
  CHECK(loss_equal(echoed, parse_loss(testutil::slurp(corpus("print_laws/guess.loss")))));
}

TEST_CASE("wpl: loop statuses") {
  auto conv = run({"wpl", corpus("loops/countdown.kf"), "--post", corpus("loops/countdown.loss"), "--json"});
  auto jc = Json::parse(conv.out)["results"];
  CHECK(jc["truncated"] == false);
  CHECK(jc["loops"][0]["status"] == "Converged");
  CHECK(jc["loops"][0]["terms"] == 4);
  auto trunc = run({"wpl", corpus("loops/geometric.kf"), "--post", corpus("loops/one.loss"), "--loop-budget", "10",
                    "--prior", "(1)=1", "--json"});
  auto jt = Json::parse(trunc.out)["results"];
  CHECK(jt["truncated"] == true);
  CHECK(jt["loops"][0]["status"] == "Truncated");
  CHECK(jt["loops"][0]["terms"] == 10);
  CHECK(jt["value"] == "1023/1024");
  auto text = run({"wpl", corpus("loops/geometric.kf"), "--post", corpus("loops/one.loss"), "--loop-budget", "3"});
  CHECK(text.out.find("Truncated(3)") != std::string::npos);
}

TEST_CASE("refine: exit codes follow the verdict") {
  const auto pb = corpus("print_laws/print_b.kf"), skip = corpus("print_laws/skip.kf");
  CHECK(run({"refine", pb, skip}).code == kExitOk);
  auto f = run({"refine", skip, pb, "--json"});
  CHECK(f.code == kExitFails);
  auto j = Json::parse(f.out)["results"]["verdict"];
  CHECK(j["kind"] == "Fails");
  CHECK(j["witness"]["certified"] == true);
  CHECK(run({"refine", pb, pb}).code == kExitOk);
  CHECK(run({"refine", pb, corpus("print_laws/print_not_b.kf")}).code == kExitOk);
  CHECK(run({"refine", corpus("print_laws/print_not_b.kf"), pb}).code == kExitOk);
  CHECK(run({"refine", pb, corpus("loops/geometric.kf")}).code == kExitType);
}

TEST_CASE("refine: user and witness losses") {
  const auto pb = corpus("print_laws/print_b.kf"), skip = corpus("print_laws/skip.kf");
  auto r = run({"refine", skip, pb, "--family", "k=1,random=0", "--witness", corpus("print_laws/guess.loss"),
                "--json"});
  auto w = Json::parse(r.out)["results"]["verdict"]["witness"];
  CHECK(w["provenance"] == "witness");
  CHECK(w["loss_label"] == corpus("print_laws/guess.loss"));
  CHECK(run({"refine", skip, pb, "--family", "k=oops"}).code == kExitSyntax);
}

TEST_CASE("datatype and simulate commands") {
  const auto ra = corpus("random_bit/abstract.kdt"), rc = corpus("random_bit/concrete.kdt");
  CHECK(run({"datatype", ra, rc, "--context", corpus("random_bit/context.kctx")}).code == kExitOk);
  auto fw = run({"simulate", "--forward", ra, rc, "--rep", corpus("random_bit/rep.kf"), "--json"});
  CHECK(fw.code == kExitOk);
  auto j = Json::parse(fw.out)["results"];
  CHECK(j["gate_passed"] == true);
  for (const auto& sq : j["squares"]) CHECK(sq["equality"] == true);

  auto leak = run({"simulate", "--forward", corpus("leaky_print/abstract.kdt"), corpus("leaky_print/concrete.kdt"),
                   "--rep", corpus("leaky_print/rep.kf")});
  CHECK(leak.code == kExitInconclusive);
  auto dt = run({"datatype", corpus("leaky_print/abstract.kdt"), corpus("leaky_print/concrete.kdt"), "--context",
                 corpus("leaky_print/context.kctx"), "--json"});
  CHECK(dt.code == kExitFails);
  CHECK(Json::parse(dt.out)["results"]["verdict"]["witness"]["certified"] == true);
}

TEST_CASE("oracle command") {
  auto r = run({"oracle", corpus("parity_leak/program.kf"), "--prior", corpus("parity_leak/prior"), "--post",
                corpus("parity_leak/post.loss"), "--exhaustive", "--json"});
  CHECK(r.code == kExitOk);
  auto j = Json::parse(r.out)["results"];
  CHECK(j["min_bayes_risk"] == "3/8");
  CHECK(j["exhaustive"] == "3/8");
  CHECK(j["agree"] == true);
  auto one = run({"oracle", corpus("print_laws/skip.kf"), "--prior", "uniform", "--post", corpus("loops/countdown.loss")});
  CHECK(one.code == kExitType);
}

TEST_CASE("json output is byte-identical across runs") {
  std::vector<std::string> args{"refine", corpus("print_laws/skip.kf"), corpus("print_laws/print_b.kf"),
                                "--family", "k=2,random=20,seed=9", "--json"};
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  std::vector<std::string> sim{"simulate", "--backward", corpus("masked_choice/abstract.kdt"),
                               corpus("masked_choice/concrete.kdt"), "--rep", corpus("masked_choice/rep.kf"),
                               "--json"};
  CHECK(run(sim).out == run(sim).out);
}

TEST_CASE("family spec parsing") {
  auto o = parse_family_spec("k=3,random=7,seed=2");
  CHECK(o.max_subset == 3);
  CHECK(o.random == 7);
  CHECK(o.seed == 2);
  CHECK(parse_family_spec("").max_subset == 2);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("loss and prior literals") {
  auto l = parse_loss("context n:{0,1,2} b:{0,1}\nexpr: n + b\ntable: (0,1)=1/2 (2,0)=inf\n");
  CHECK(l.gens().size() == 2);
  CHECK(l.gens()[1][4].is_infinite());
  CHECK(loss_equal(parse_loss(format_loss(l)), l));
  auto d = parse_prior("(0,1)=1/2 (2,0)=1/2", l.ctx_ptr());
  CHECK(format_distribution(d) == "(0,1)=1/2 (2,0)=1/2");
  CHECK(parse_prior("uniform", l.ctx_ptr()).weights[3] == Rational(1, 6));
}
