#include "rspec/cli/commands.hpp"

#include <sstream>

#include "rspec/cli/suites.hpp"
#include "rspec/finiverse/family.hpp"
#include "rspec/kernel/errors.hpp"
#include "rspec/localalg/divisible.hpp"

namespace rspec {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"ass",    "supp", "filtration", "spectral", "torsion",
                                                 "bass",   "injres", "member",   "verify"};
  return names;
}

namespace {

struct Context {
  const Workspace& ws;
  const std::map<std::string, std::string>& flags;
  Json bindings = Json::object();
  bool sampled = false;

  std::optional<std::string> flag(const std::string& k) const {
    auto it = flags.find(k);
    if (it == flags.end()) return std::nullopt;
    return it->second;
  }

  std::string need(const std::string& k) const {
    auto v = flag(k);
    if (!v) throw InvalidArgument("missing --" + k);
    return *v;
  }

  void note(const std::string& name) {
    if (const Binding* b = ws.find(name)) bindings[name] = b->where.to_string();
  }

  RingPtr default_ring() const {
    if (auto r = flag("ring")) {
      if (const Binding* b = ws.find(*r); b && b->kind == BindingKind::Ring) return b->ring;
      return parse_ring_spec(*r);
    }
    if (const Binding* b = ws.current_ring()) return b->ring;
    return Ring::integers();
  }

  ModulePresentation module() {
    std::string text = need("module");
    if (const Binding* b = ws.find(text); b && b->kind == BindingKind::Module) {
      note(text);
      return *b->module;
    }
    return parse_module_expr(ws, default_ring(), text);
  }

  PrimeIdeal prime(const RingPtr& r) {
    std::string text = need("prime");
    note(text);
    return parse_prime_ref(ws, r, text);
  }

  SpecSet set(const RingPtr& r) {
    std::string text = need("set");
    note(text);
    return parse_set_ref(ws, r, text);
  }

  std::optional<std::vector<PrimeIdeal>> candidates(const RingPtr& r) {
    auto text = flag("candidates");
    if (!text) return std::nullopt;
    sampled = true;
    return parse_points_ref(ws, r, *text).points();
  }
};

Json prime_json(const PrimeIdeal& p) { return p.generator_strings(); }

Json primes_json(const std::vector<PrimeIdeal>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(prime_json(p));
  return a;
}

Json column_json(const Ring& r, const Column& c) {
  Json a = Json::array();
  for (const auto& x : c) a.push_back(r.element_to_string(x));
  return a;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t k = std::stoul(s);
      return {k, k};
    }
    std::size_t a = std::stoul(s.substr(0, dots)), b = std::stoul(s.substr(dots + 2));
    if (a > b) throw InvalidArgument("empty range " + s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidArgument("range must look like k0..k1, got '" + s + "'");
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument(what + " must be a nonnegative integer, got '" + s + "'");
  }
}

Json clause_json(const ClauseReport& r) {
  Json cl = Json::array();
  for (const auto& c : r.clauses) {
    Json j;
    j["index"] = c.index;
    j["holds"] = c.holds;
    j["completeness"] = completeness_name(c.completeness);
    j["checked"] = primes_json(c.checked);
    j["witness"] = c.witness ? Json(prime_json(*c.witness)) : Json(nullptr);
    cl.push_back(j);
  }
  return cl;
}

Json bijection_json(const BijectionReport& r) {
  Json j;
  j["suite"] = theorem_name(r.theorem);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["bijection"] = r.bijection;
  j["bound"] = r.bound;
  j["universe_size"] = r.universe_size;
  j["strategy"] = r.strategy;
  j["families_examined"] = r.families_examined;
  Json m = Json::array();
  for (const auto& e : r.matching) m.push_back({{"points", e.points}, {"members", e.members}});
  j["matching"] = m;
  j["counterexamples"] = r.counterexamples;
  j["bound_sensitivity"] = {{"rerun_bound", r.rerun_bound},
                            {"lhs", r.rerun_lhs},
                            {"rhs", r.rerun_rhs},
                            {"bijection", r.rerun_bijection},
                            {"stable", r.bound_stable}};
  return j;
}

}  // namespace

CommandOutcome run_command(const Workspace& ws, const std::string& command, const std::map<std::string, std::string>& flags) {
  Context cx{ws, flags};
  Json result;
  std::string ring_name;
  bool proved = true;
  int exit_code = 0;

  if (command == "ass") {
    ModulePresentation m = cx.module();
    ring_name = m.ring()->to_string();
    auto ps = unique_primes(ass_enumerate(m, cx.candidates(m.ring())));
    result["ass"] = primes_json(ps);
  } else if (command == "supp") {
    ModulePresentation m = cx.module();
    ring_name = m.ring()->to_string();
    SpecSet s = support(m);
    result["supp"] = primes_json(s.generators());
    result["closure"] = s.to_string();
  } else if (command == "filtration") {
    ModulePresentation m = cx.module();
    ring_name = m.ring()->to_string();
    PrimeFiltration f = prime_filtration(m);
    Json steps = Json::array();
    for (std::size_t i = 0; i < f.primes.size(); ++i)
      steps.push_back({{"prime", prime_json(f.primes[i])}, {"element", column_json(*m.ring(), f.elements[i])}});
    result["length"] = f.primes.size();
    result["steps"] = steps;
  } else if (command == "spectral") {
    ModulePresentation m = cx.module();
    ring_name = m.ring()->to_string();
    auto p = is_spectral(m);
    result["spectral"] = p.has_value();
    result["prime"] = p ? Json(prime_json(*p)) : Json(nullptr);
  } else if (command == "torsion") {
    ModulePresentation m = cx.module();
    ring_name = m.ring()->to_string();
    SpecSet s = cx.set(m.ring());
    TorsionDecomposition d = torsion_decompose(m, s);
    Json gens = Json::array();
    for (const auto& g : d.x.generators()) gens.push_back(column_json(*m.ring(), g));
    result["set"] = s.to_string();
    result["torsion"] = module_expr_string(d.x.module);
    result["torsion_generators"] = gens;
    result["torsion_free"] = module_expr_string(d.y.module);
    result["exponent"] = d.exponent;
    result["verified"] = true;
  } else if (command == "bass") {
    ModulePresentation m = cx.module();
    ring_name = m.ring()->to_string();
    PrimeIdeal p = cx.prime(m.ring());
    auto [k0, k1] = parse_range(cx.flag("range").value_or("0..2"));
    Json flags_out = Json::array(), dims = Json::array();
    for (std::size_t k = k0; k <= k1; ++k) {
      flags_out.push_back(bass_nonvanishing(p, k, m));
      try {
        dims.push_back(bass_dimension(p, k, m));
      } catch (const UnsupportedRing&) {
        dims.push_back(nullptr);
      }
    }
    result["prime"] = prime_json(p);
    result["range"] = {k0, k1};
    result["nonvanishing"] = flags_out;
    result["dimensions"] = dims;
  } else if (command == "injres") {
    ModulePresentation m = cx.module();
    ring_name = m.ring()->to_string();
    std::size_t upto = parse_u64(cx.flag("upto").value_or("2"), "--upto");
    BassTable t = symbolic_injective_resolution(m, upto, cx.candidates(m.ring()));
    Json terms = Json::array();
    for (std::size_t k = 0; k < t.degrees(); ++k) terms.push_back(t.injective_term(k));
    result["candidates"] = primes_json(t.candidates());
    result["terms"] = terms;
    if (m.ring()->same_as(*Ring::integers())) {
      // over Z every E_k is explicit as a divisible group
      Json div = Json::array();
      div.push_back(divisible_injective_hull(m).to_string());
      for (std::size_t k = 1; k <= upto; ++k) div.push_back(divisible_cosyzygy(m, k).to_string());
      result["divisible_terms"] = div;
    }
    // only the listed candidate primes are examined
    if (!ring_is_artinian(*m.ring())) cx.sampled = true;
  } else if (command == "member") {
    ModulePresentation m = cx.module();
    const RingPtr& r = m.ring();
    ring_name = r->to_string();
    std::string cls = cx.need("class");
    result["class"] = cls;
    if (cls == "serre" || cls == "torsion" || cls == "torsionfree" || cls == "oneres") {
      SpecSet s = cx.set(r);
      result["set"] = s.to_string();
      bool in = cls == "serre" ? serre_member(m, s)
                : cls == "torsion" ? torsion_class_member(m, s)
                : cls == "torsionfree" ? torsion_free_member(m, s)
                                      : one_resolving_member(m, s);
      result["member"] = in;
      if (cls == "oneres") result["set_valid_for_ring"] = one_resolving_valid(s, Generator::ring(r));
    } else if (cls == "ctilde") {
      std::string name = cx.need("gseq");
      const Binding& b = ws.get(name, BindingKind::GSeq);
      cx.note(name);
      std::vector<PrimeIdeal> samples;
      if (auto c = cx.candidates(r)) samples = *c;
      ClauseReport valid = g_sequence_validate(*b.gseq, samples);
      ClauseReport rep = c_tilde_member(m, *b.gseq, samples);
      result["gseq_valid"] = valid.holds;
      result["member"] = rep.holds;
      result["clauses"] = clause_json(rep);
      if (!rep.note.empty()) result["note"] = rep.note;
      if (rep.completeness == Completeness::Sampled || valid.completeness == Completeness::Sampled) cx.sampled = true;
    } else if (cls == "psi") {
      std::string text = cx.need("points");
      cx.note(text);
      PointSet s = parse_points_ref(ws, r, text);
      result["points"] = s.to_string();
      result["member"] = psi_member(m, s);
    } else {
      throw InvalidArgument("unknown class '" + cls + "' (serre, torsion, torsionfree, oneres, ctilde, psi)");
    }
  } else if (command == "verify") {
    std::string suite = cx.need("suite");
    if (suite == "p3_9" || suite == "ashah" || suite == "dr9_4" || suite == "p5corr") {
      RingPtr r = parse_ring_spec(cx.flag("ring").value_or("ZZ/12"));
      ring_name = r->to_string();
      unsigned long bound = parse_u64(cx.flag("bound").value_or("144"), "--bound");
      BijectionReport rep = verify_bijection(theorem_from_name(suite), r, bound);
      result = bijection_json(rep);
      exit_code = rep.verified() ? 0 : 2;
    } else {
      std::uint64_t seed = parse_u64(cx.flag("seed").value_or("1"), "--seed");
      double scale = 1.0;
      if (auto s = cx.flag("scale")) {
        try {
          scale = std::stod(*s);
        } catch (const std::logic_error&) {
          throw InvalidArgument("--scale must be a number");
        }
        if (!(scale > 0)) throw InvalidArgument("--scale must be positive");
      }
      SuiteReport rep = run_suite(suite, seed, scale);
      ring_name = "mixed";
      result = rep.to_json();
      if (rep.completeness == Completeness::Sampled) cx.sampled = true;
      exit_code = rep.passed() ? 0 : 2;
    }
  } else {
    throw InvalidArgument("unknown command '" + command + "'");
  }

  if (cx.sampled) proved = false;
  Json report;
  report["command"] = command;
  Json inputs = Json::object();
  for (const auto& [k, v] : flags) inputs[k] = v;
  report["inputs"] = inputs;
  report["ring"] = ring_name;
  report["result"] = result;
  report["provenance"] = {{"bindings", cx.bindings}};
  report["proved"] = proved;
  report["sampled"] = !proved;
  return {report, exit_code};
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << report["command"].get<std::string>() << " over " << report["ring"].get<std::string>() << " ("
     << (report["proved"].get<bool>() ? "proved" : "sampled") << ")\n";
  for (const auto& [k, v] : report["result"].items()) {
    os << "  " << k << ": ";
    if (v.is_string()) {
      os << v.get<std::string>();
    } else if (v.is_array() && !v.empty() && v.front().is_string()) {
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "\n    " : "\n    ") << v[i].get<std::string>();
    } else {
      os << v.dump();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace rspec
