#include <gtest/gtest.h>

#include <random>

#include "rspec/cli/commands.hpp"
#include "rspec/cli/suites.hpp"
#include "rspec/kernel/errors.hpp"
#include "rspec/modules/smith.hpp"
#include "test_util.hpp"

using namespace rspec;
using Json = nlohmann::ordered_json;

namespace {

const char* kDemo = R"(# demo workspace
ring R = ZZ
module M = coker [[12]]
prime two = (2)
set S = closure{two, (3)}
points P = {(5)}
gseq Y = (closure{(2)}, closure{}) for R

ring Q = QQ[x,y]
prime px = (x)
module N = R/(x^2, x*y)
module K = coker [[x, y]] + N
set V = closure{px}
prime q = (x^2+y) assume prime

ring T = QQ[x]
prime t = (x^2+1)
)";

Json run(const Workspace& ws, const std::string& cmd, const std::map<std::string, std::string>& flags) {
  return run_command(ws, cmd, flags).report;
}

DslError parse_error(const std::string& text) {
  try {
    parse_workspace(text, "t");
  } catch (const DslError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return DslError("t", 0, 0, "none");
}

}  // namespace

TEST(Dsl, Examples) {
  Workspace ws = parse_workspace(kDemo, "demo");
  const Binding& m = ws.get("M", BindingKind::Module);
  EXPECT_TRUE(pid_isomorphic(*m.module, ModulePresentation::cyclic(Ideal(Ring::integers(), {Ring::integers()->from_int(12)}))));
  EXPECT_EQ(m.where.line, 3u);
  EXPECT_EQ(m.where.column, 1u);
  EXPECT_EQ(ws.get("px", BindingKind::Prime).prime->certification(), Certification::Auto);
  EXPECT_EQ(ws.get("q", BindingKind::Prime).prime->certification(), Certification::Asserted);
  EXPECT_EQ(ws.get("t", BindingKind::Prime).prime->certification(), Certification::Auto);
  EXPECT_EQ(ws.get("S", BindingKind::Set).set->to_string(), "closure{(2), (3)}");
  EXPECT_EQ(ws.get("K", BindingKind::Module).module->rank(), 2u);
  EXPECT_EQ(ws.get("Y", BindingKind::GSeq).gseq->length(), 2u);
  EXPECT_EQ(ws.get("N", BindingKind::Module).ring_name, "Q");
  EXPECT_THROW(ws.get("M", BindingKind::Prime), InvalidArgument);
  EXPECT_THROW(ws.get("missing", BindingKind::Module), InvalidArgument);
}

TEST(Dsl, RingSpecs) {
  EXPECT_TRUE(parse_ring_spec("ZZ")->same_as(*Ring::integers()));
  EXPECT_TRUE(parse_ring_spec("Z/12")->same_as(*Ring::integers_mod(12)));
  EXPECT_TRUE(parse_ring_spec("ZZ/(12)")->same_as(*Ring::integers_mod(12)));
  EXPECT_TRUE(parse_ring_spec("QQ[x, y]")->same_as(*Ring::rationals({"x", "y"})));
  EXPECT_TRUE(parse_ring_spec("GF(2)[x]")->same_as(*Ring::prime_field(2, {"x"})));
  EXPECT_TRUE(parse_ring_spec("F_5")->same_as(*Ring::prime_field(5)));
  for (const char* s : {"ZZ", "ZZ/12", "QQ[x,y]/(x^2, x*y)", "GF(2)[x]/(x^3)", "GF(3)[x,y]", "QQ"}) {
    RingPtr r = parse_ring_spec(s);
    EXPECT_TRUE(parse_ring_spec(r->to_string())->same_as(*r)) << s;
  }
  EXPECT_THROW(parse_ring_spec("GF(4)[x]"), DslError);
  EXPECT_THROW(parse_ring_spec("RR"), DslError);
  EXPECT_THROW(parse_ring_spec("QQ[x,x]"), DslError);
}

TEST(Dsl, ErrorsCarryLocation) {
  DslError e = parse_error("ring R = ZZ\nmodule M = coker [[1, 2], [3]]");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_NE(std::string(e.what()).find("arity mismatch"), std::string::npos);
  DslError f = parse_error("ring R = QQ[x]\n\nmodule M = coker [[x +]]");
  EXPECT_EQ(f.line(), 3u);
  EXPECT_FALSE(f.expected().empty());
  DslError g = parse_error("ring R = QQ[x,y]\nprime p = (x^2+y^2)");
  EXPECT_EQ(g.line(), 2u);
  EXPECT_EQ(g.column(), 11u);
  EXPECT_NE(std::string(g.what()).find("assume prime"), std::string::npos);
  DslError h = parse_error("ring R = WW");
  EXPECT_NE(std::string(h.what()).find("unknown ring"), std::string::npos);
  DslError i = parse_error("module M = free 2");
  EXPECT_NE(std::string(i.what()).find("no ring"), std::string::npos);
  DslError j = parse_error("ring R = ZZ\nring R = QQ");
  EXPECT_EQ(j.line(), 2u);
  DslError k = parse_error("ring R = ZZ\nfoo M = 1");
  EXPECT_NE(std::string(k.what()).find("statement"), std::string::npos);
  DslError l = parse_error("ring R = ZZ\nprime p = (2)\nring Q = QQ[x]\nset S = closure{p}");
  EXPECT_EQ(l.line(), 4u);
  DslError m = parse_error("ring R = ZZ\nmodule M = coker [[1]\n");
  EXPECT_EQ(m.expected(), "']'");
  DslError n = parse_error("ring R = ZZ\ngseq Y = (closure{(2)}, closure{(3)}) for R");
  EXPECT_EQ(n.line(), 2u);
}

TEST(Dsl, PrintParseRoundTrip) {
  Workspace ws = parse_workspace(kDemo, "demo");
  std::string once = print_workspace(ws);
  Workspace again = parse_workspace(once, "printed");
  EXPECT_EQ(print_workspace(again), once);
  ASSERT_EQ(again.bindings().size(), ws.bindings().size());
  for (std::size_t i = 0; i < ws.bindings().size(); ++i) {
    const Binding &a = ws.bindings()[i], &b = again.bindings()[i];
    EXPECT_EQ(a.name, b.name);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_TRUE(a.ring->same_as(*b.ring));
    if (a.module) {
      EXPECT_EQ(a.module->rank(), b.module->rank());
      EXPECT_EQ(a.module->relations(), b.module->relations());
    }
    if (a.prime) {
      EXPECT_TRUE(*a.prime == *b.prime);
      EXPECT_EQ(a.prime->certification(), b.prime->certification());
    }
    if (a.set) EXPECT_TRUE(*a.set == *b.set);
    if (a.points) EXPECT_TRUE(*a.points == *b.points);
  }
}

TEST(Dsl, RandomRoundTrip) {
  std::mt19937_64 rng(77);
  static const char* zpolys[] = {"0", "1", "2", "-3", "12", "7"};
  static const char* xpolys[] = {"0", "x", "y", "x^2 - y", "3*x*y + 1", "-y^3", "1/2*x"};
  for (int t = 0; t < 40; ++t) {
    std::string text = t % 2 ? "ring R = QQ[x,y]\n" : "ring R = ZZ\n";
    const char** pool = t % 2 ? xpolys : zpolys;
    std::size_t npool = t % 2 ? 7 : 6;
    std::size_t rows = rng() % 3, cols = rng() % 3;
    text += "module M = coker [";
    for (std::size_t i = 0; i < rows; ++i) {
      text += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols; ++j) text += std::string(j ? ", " : "") + pool[rng() % npool];
      text += "]";
    }
    text += "]\n";
    text += t % 2 ? "set S = closure{(x), (y)}\npoints P = {(x, y)}\n" : "set S = closure{(5)}\npoints P = {(0), (3)}\n";
    Workspace ws = parse_workspace(text, "r");
    std::string once = print_workspace(ws);
    EXPECT_EQ(print_workspace(parse_workspace(once, "r2")), once) << text;
    EXPECT_EQ(parse_workspace(once, "r2").get("M", BindingKind::Module).module->relations(),
              ws.get("M", BindingKind::Module).module->relations());
  }
}

TEST(Commands, Examples) {
  Workspace ws = parse_workspace(kDemo, "demo");
  Json a = run(ws, "ass", {{"module", "M"}});
  EXPECT_EQ(a["result"].dump(), R"({"ass":[["2"],["3"]]})");
  Json b = run(Workspace{}, "bass", {{"module", "Z"}, {"prime", "(2)"}, {"range", "0..2"}});
  EXPECT_EQ(b["result"]["nonvanishing"].dump(), "[false,true,false]");
  EXPECT_EQ(b["result"]["dimensions"].dump(), "[0,1,0]");
  CommandOutcome v = run_command(Workspace{}, "verify", {{"suite", "dr9_4"}, {"ring", "Z/12"}, {"bound", "144"}});
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(v.report["result"]["lhs"], 4);
  EXPECT_EQ(v.report["result"]["rhs"], 4);
  EXPECT_EQ(v.report["result"]["bijection"], true);
  Json s = run(ws, "supp", {{"module", "N"}});
  EXPECT_EQ(s["result"]["closure"], "closure{(x)}");
  EXPECT_EQ(s["ring"], "QQ[x,y]");
  Json sp = run(ws, "spectral", {{"module", "R/(x)"}, {"ring", "Q"}});
  EXPECT_EQ(sp["result"]["spectral"], true);
  Json f = run(ws, "filtration", {{"module", "M"}});
  EXPECT_EQ(f["result"]["length"], 3);
  Json tor = run(ws, "torsion", {{"module", "M"}, {"set", "closure{(2)}"}});
  EXPECT_EQ(tor["result"]["verified"], true);
  Json mem = run(ws, "member", {{"module", "M"}, {"class", "serre"}, {"set", "S"}});
  EXPECT_EQ(mem["result"]["member"], true);
  EXPECT_EQ(mem["provenance"]["bindings"]["S"], "demo:5:1");
  Json ct = run(ws, "member", {{"module", "Z/3"}, {"class", "ctilde"}, {"gseq", "Y"}, {"ring", "R"}});
  EXPECT_EQ(ct["result"]["member"], true);
  EXPECT_EQ(ct["result"]["gseq_valid"], true);
  Json psi = run(ws, "member", {{"module", "Z/5"}, {"class", "psi"}, {"points", "P"}, {"ring", "R"}});
  EXPECT_EQ(psi["result"]["member"], true);
  Json inj = run(Workspace{}, "injres", {{"module", "Z"}, {"upto", "1"}});
  EXPECT_EQ(inj["result"]["divisible_terms"][1], "rank 0; default 1; exceptions {}");
  EXPECT_EQ(inj["sampled"], true);
}

TEST(Commands, ReportsAreSchemaStable) {
  Workspace ws = parse_workspace(kDemo, "demo");
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> calls = {
      {"ass", {{"module", "M"}}},
      {"supp", {{"module", "K"}}},
      {"filtration", {{"module", "N"}}},
      {"spectral", {{"module", "M"}}},
      {"torsion", {{"module", "K"}, {"set", "V"}}},
      {"bass", {{"module", "M"}, {"prime", "two"}, {"range", "0..1"}}},
      {"injres", {{"module", "M"}, {"upto", "1"}}},
      {"member", {{"module", "N"}, {"class", "torsionfree"}, {"set", "V"}}},
      {"member", {{"module", "M"}, {"class", "oneres"}, {"set", "S"}}},
      {"verify", {{"suite", "p3_9"}, {"ring", "ZZ/6"}, {"bound", "36"}}},
      {"verify", {{"suite", "homsub"}, {"seed", "3"}, {"scale", "0.05"}}},
  };
  const std::vector<std::string> keys = {"command", "inputs", "ring", "result", "provenance", "proved", "sampled"};
  for (const auto& [cmd, flags] : calls) {
    Json r = run(ws, cmd, flags);
    std::vector<std::string> got;
    for (const auto& [k, v] : r.items()) got.push_back(k);
    EXPECT_EQ(got, keys) << cmd;
    EXPECT_NE(r["proved"], r["sampled"]);
    EXPECT_FALSE(render_text(r).empty());
  }
}

TEST(Commands, Errors) {
  Workspace ws = parse_workspace(kDemo, "demo");
  EXPECT_THROW(run(ws, "ass", {}), InvalidArgument);
  EXPECT_THROW(run(ws, "frobnicate", {}), InvalidArgument);
  EXPECT_THROW(run(ws, "member", {{"module", "M"}, {"class", "nope"}}), InvalidArgument);
  EXPECT_THROW(run(ws, "bass", {{"module", "M"}, {"prime", "(2)"}, {"range", "2..1"}}), InvalidArgument);
  EXPECT_THROW(run(ws, "torsion", {{"module", "M"}, {"set", "closure{(x)}"}}), Error);
  EXPECT_THROW(run(ws, "verify", {{"suite", "p3_9"}, {"ring", "QQ[x]"}}), UnsupportedRing);
  EXPECT_THROW(run(ws, "verify", {{"suite", "nope"}}), InvalidArgument);
}

TEST(Commands, CounterexampleExitCode) {
  // below the residue field sizes the finite correspondence collapses
  CommandOutcome o = run_command(Workspace{}, "verify", {{"suite", "p3_9"}, {"ring", "ZZ/12"}, {"bound", "2"}});
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_FALSE(o.report["result"]["counterexamples"].empty());
}

TEST(Commands, DeterministicJson) {
  for (const auto& suite : random_suite_names()) {
    if (suite == "torsionpair") continue;  // covered by the acceptance run
    std::map<std::string, std::string> flags = {{"suite", suite}, {"seed", "11"}, {"scale", "0.2"}};
    std::string a = run(Workspace{}, "verify", flags).dump(), b = run(Workspace{}, "verify", flags).dump();
    EXPECT_EQ(a, b) << suite;
  }
  std::map<std::string, std::string> f = {{"suite", "ashah"}, {"ring", "GF(2)[x]/(x^3)"}, {"bound", "32"}};
  EXPECT_EQ(run(Workspace{}, "verify", f).dump(), run(Workspace{}, "verify", f).dump());
}

TEST(Suites, SmallRunsPass) {
  for (const auto& suite : random_suite_names()) {
    SuiteReport r = run_suite(suite, 5, suite == "torsionpair" ? 0.1 : 0.3);
    EXPECT_TRUE(r.passed()) << suite << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checks, 0u);
  }
  EXPECT_THROW(run_suite("nope", 1), InvalidArgument);
}
