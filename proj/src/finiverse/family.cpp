#include "rspec/finiverse/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rspec/kernel/errors.hpp"

namespace rspec {

std::string ClosureFlags::to_string() const {
  std::vector<std::string> on;
  if (sub) on.push_back("sub");
  if (quot) on.push_back("quot");
  if (ext) on.push_back("ext");
  if (coker) on.push_back("coker");
  if (sum) on.push_back("sum");
  if (ess) on.push_back("ess");
  std::string s;
  for (std::size_t i = 0; i < on.size(); ++i) s += (i ? "+" : "") + on[i];
  return s.empty() ? "none" : s;
}

std::size_t ClosedFamily::count() const { return static_cast<std::size_t>(std::count(members.begin(), members.end(), 1)); }

std::vector<std::size_t> ClosedFamily::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i]) out.push_back(i);
  }
  return out;
}

namespace {

// One pass of every flagged operation; returns true if something was added.
bool grow(const FiniteUniverse& u, std::vector<char>& in, ClosureFlags f) {
  const std::size_t n = u.size();
  bool changed = false;
  auto add = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = 1;
      changed = true;
    }
  };
  std::vector<std::size_t> cur;
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i]) cur.push_back(i);
  }
  for (std::size_t i : cur) {
    // quotients of a finite module run over the same classes as its submodules
    if (f.sub || f.quot) {
      for (std::size_t s : u.subs(i)) add(s);
    }
    if (f.ess) {
      for (std::size_t e : u.essential_over(i)) add(e);
    }
    for (std::size_t j : cur) {
      if (f.ext) {
        for (std::size_t e : u.extensions(i, j)) add(e);
      }
      if (f.coker) {
        for (std::size_t c : u.cokernels(i, j)) add(c);
      }
      if (f.sum) {
        if (auto s = u.sum(i, j)) add(*s);
      }
    }
  }
  return changed;
}

}  // namespace

ClosedFamily close_family(const FiniteUniverse& u, const std::vector<std::size_t>& seed, ClosureFlags flags) {
  std::vector<char> in(u.size(), 0);
  in[0] = 1;
  for (std::size_t s : seed) {
    if (s >= u.size()) throw InvalidArgument("seed index outside the universe");
    in[s] = 1;
  }
  while (grow(u, in, flags)) {
  }
  return {in, flags};
}

bool is_closed(const FiniteUniverse& u, const std::vector<char>& members, ClosureFlags flags) {
  std::vector<char> in = members;
  return !grow(u, in, flags);
}

std::vector<std::size_t> class_points(const ModuleClass& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (!c.parts[i].empty()) out.push_back(i);
  }
  return out;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::SerreSupport:
      return "p3_9";
    case Theorem::AShah:
      return "ashah";
    case Theorem::TorsionPairs:
      return "p5corr";
    case Theorem::EssentialClosed:
      return "dr9_4";
  }
  return "?";
}

Theorem theorem_from_name(const std::string& s) {
  if (s == "p3_9" || s == "P3.9") return Theorem::SerreSupport;
  if (s == "ashah" || s == "AShah") return Theorem::AShah;
  if (s == "p5corr" || s == "p5corr_restricted" || s == "P5corr-restricted") return Theorem::TorsionPairs;
  if (s == "dr9_4" || s == "Dr9.4") return Theorem::EssentialClosed;
  throw InvalidArgument("unknown bijection suite '" + s + "'");
}

namespace {

ClosureFlags flags_for(Theorem t) {
  switch (t) {
    case Theorem::SerreSupport:
      return ClosureFlags::serre();
    case Theorem::AShah:
      return ClosureFlags::narrow();
    case Theorem::TorsionPairs:
      return ClosureFlags::torsion();
    case Theorem::EssentialClosed:
      return ClosureFlags::dr();
  }
  return {};
}

using Mask = std::vector<char>;

struct Candidates {
  std::vector<Mask> families;
  std::size_t examined = 0;
  std::string strategy;
};

Candidates candidate_families(const FiniteUniverse& u, ClosureFlags f, const VerifyOptions& o) {
  Candidates c;
  const std::size_t n = u.size();
  std::set<Mask> seen;
  if (n <= o.subset_universe_limit && n - 1 < 63) {
    std::uint64_t total = std::uint64_t{1} << (n - 1);
    if (total > o.family_budget)
      throw ExplosionGuard("subset enumeration needs " + std::to_string(total) + " families (budget " +
                           std::to_string(o.family_budget) + ")");
    c.strategy = "all subsets";
    for (std::uint64_t m = 0; m < total; ++m) {
      Mask in(n, 0);
      in[0] = 1;
      for (std::size_t i = 1; i < n; ++i) in[i] = m >> (i - 1) & 1;
      ++c.examined;
      if (is_closed(u, in, f)) seen.insert(in);
    }
  } else {
    c.strategy = "closures of singleton and pair seeds";
    std::set<Mask> singles;
    for (std::size_t i = 0; i < n; ++i) {
      ++c.examined;
      singles.insert(close_family(u, {i}, f).members);
    }
    std::vector<Mask> sv(singles.begin(), singles.end());
    if (sv.size() * sv.size() / 2 > o.family_budget)
      throw ExplosionGuard("pair-seed enumeration exceeds the family budget of " + std::to_string(o.family_budget));
    seen = singles;
    for (std::size_t a = 0; a < sv.size(); ++a) {
      for (std::size_t b = a + 1; b < sv.size(); ++b) {
        Mask in(n);
        for (std::size_t i = 0; i < n; ++i) in[i] = sv[a][i] | sv[b][i];
        std::vector<std::size_t> seed;
        for (std::size_t i = 0; i < n; ++i) {
          if (in[i]) seed.push_back(i);
        }
        ++c.examined;
        seen.insert(close_family(u, seed, f).members);
      }
    }
  }
  c.families.assign(seen.begin(), seen.end());
  return c;
}

std::string point_name(const FiniteUniverse& u, std::size_t p) { return u.ring().spectrum[p].prime.to_string(); }

std::vector<std::string> point_names(const FiniteUniverse& u, const std::vector<std::size_t>& s) {
  std::vector<std::string> out;
  for (std::size_t p : s) out.push_back(point_name(u, p));
  return out;
}

std::string set_string(const std::vector<std::string>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return s + "}";
}

// Classes whose points lie in the subset (bit mask over the spectrum).
Mask supported_in(const FiniteUniverse& u, std::uint64_t subset) {
  Mask in(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool ok = true;
    for (std::size_t p : class_points(u.cls(i))) ok = ok && (subset >> p & 1);
    in[i] = ok;
  }
  return in;
}

std::uint64_t points_of(const FiniteUniverse& u, const Mask& f) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t p : class_points(u.cls(i))) s |= std::uint64_t{1} << p;
  }
  return s;
}

std::vector<std::size_t> subset_points(std::uint64_t s, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < k; ++p) {
    if (s >> p & 1) out.push_back(p);
  }
  return out;
}

std::vector<std::string> member_names(const FiniteUniverse& u, const Mask& f) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (f[i]) out.push_back(u.name(i));
  }
  return out;
}

// Why `f` fails to be closed under `flags`: a concrete operation leaving it.
std::string closure_witness(const FiniteUniverse& u, const Mask& f, ClosureFlags flags) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!f[i]) continue;
    if (flags.sub || flags.quot) {
      for (std::size_t s : u.subs(i)) {
        if (!f[s]) return u.name(s) + " is a subquotient of " + u.name(i) + " but lies outside";
      }
    }
    if (flags.ess) {
      for (std::size_t e : u.essential_over(i)) {
        if (!f[e]) return u.name(e) + " is an essential extension of " + u.name(i) + " but lies outside";
      }
    }
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (!f[j]) continue;
      if (flags.ext) {
        for (std::size_t e : u.extensions(i, j)) {
          if (!f[e]) return u.name(e) + " is an extension of " + u.name(j) + " by " + u.name(i) + " but lies outside";
        }
      }
      if (flags.coker) {
        for (std::size_t c : u.cokernels(i, j)) {
          if (!f[c]) return u.name(c) + " is a cokernel of a map " + u.name(i) + " -> " + u.name(j) + " but lies outside";
        }
      }
      if (flags.sum) {
        if (auto s = u.sum(i, j); s && !f[*s]) return u.name(*s) + " is a direct sum of members but lies outside";
      }
    }
  }
  return "";
}

struct Outcome {
  std::size_t lhs = 0, rhs = 0, examined = 0;
  bool bijection = false;
  std::string strategy;
  std::vector<MatchEntry> matching;
  std::vector<std::string> counterexamples;
  std::map<std::uint64_t, Mask> by_subset;
};

Outcome run(Theorem t, const FiniteUniverse& u, const VerifyOptions& o) {
  Outcome out;
  const std::size_t k = u.ring().spectrum.size();
  if (k >= 20) throw ExplosionGuard("spectrum too large for subset enumeration");
  const ClosureFlags f = flags_for(t);
  Candidates c = candidate_families(u, f, o);
  out.examined = c.examined;
  out.strategy = c.strategy;

  if (t == Theorem::AShah) {
    // narrow families against Serre families
    Candidates s = candidate_families(u, ClosureFlags::serre(), o);
    out.examined += s.examined;
    out.lhs = c.families.size();
    out.rhs = s.families.size();
    for (const auto& fam : c.families) {
      std::string w = closure_witness(u, fam, ClosureFlags::serre());
      if (!w.empty()) out.counterexamples.push_back("narrow family " + set_string(member_names(u, fam)) + ": " + w);
    }
    for (const auto& fam : s.families) {
      std::string w = closure_witness(u, fam, ClosureFlags::narrow());
      if (!w.empty()) out.counterexamples.push_back("Serre family " + set_string(member_names(u, fam)) + ": " + w);
    }
    std::set<Mask> a(c.families.begin(), c.families.end()), b(s.families.begin(), s.families.end());
    out.bijection = a == b;
    for (const auto& fam : c.families) {
      std::uint64_t pts = points_of(u, fam);
      out.by_subset[pts] = fam;
      out.matching.push_back({point_names(u, subset_points(pts, k)), member_names(u, fam)});
    }
    return out;
  }

  out.lhs = std::size_t{1} << k;
  out.rhs = c.families.size();
  std::set<Mask> images;
  bool inverse = true;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    Mask fam = supported_in(u, s);
    images.insert(fam);
    out.by_subset[s] = fam;
    std::vector<std::string> pts = point_names(u, subset_points(s, k));
    out.matching.push_back({pts, member_names(u, fam)});
    std::string w = closure_witness(u, fam, f);
    if (!w.empty()) {
      inverse = false;
      out.counterexamples.push_back("family over " + set_string(pts) + " is not closed: " + w);
    }
    if (points_of(u, fam) != s) {
      inverse = false;
      out.counterexamples.push_back("family over " + set_string(pts) + " does not recover its points");
    }
    if (t == Theorem::TorsionPairs) {
      // torsion-free partner: classes avoiding s, closed under sub, ext and hulls
      Mask free(u.size(), 0);
      for (std::size_t i = 0; i < u.size(); ++i) {
        free[i] = 1;
        for (std::size_t p : class_points(u.cls(i))) {
          if (s >> p & 1) free[i] = 0;
        }
      }
      std::string fw = closure_witness(u, free, {true, false, true, false, true, true});
      if (!fw.empty()) out.counterexamples.push_back("torsion-free class for " + set_string(pts) + ": " + fw);
      for (std::size_t i = 0; i < u.size(); ++i) {
        // M = X (+) Y with X torsion and Y torsion-free
        ModuleClass x = u.cls(i), y = u.cls(i);
        for (std::size_t p = 0; p < k; ++p) (s >> p & 1 ? y : x).parts[p].clear();
        auto xi = u.index_of(x), yi = u.index_of(y);
        if (!xi || !yi || !fam[*xi] || !free[*yi] || u.sum(*xi, *yi) != i)
          out.counterexamples.push_back("no torsion decomposition of " + u.name(i) + " for " + set_string(pts));
      }
    }
  }
  for (const auto& fam : c.families) {
    if (!images.count(fam)) {
      inverse = false;
      out.counterexamples.push_back("closed family " + set_string(member_names(u, fam)) +
                                    " is not determined by its points " +
                                    set_string(point_names(u, subset_points(points_of(u, fam), k))));
    }
  }
  out.bijection = inverse && images.size() == out.lhs && out.rhs == out.lhs;
  return out;
}

}  // namespace

BijectionReport verify_bijection(Theorem t, const RingPtr& ring, unsigned long bound, const VerifyOptions& opts) {
  FiniteUniverse u = enumerate_universe(ring, bound);
  Outcome o = run(t, u, opts);
  BijectionReport r;
  r.theorem = t;
  r.ring = ring->to_string();
  r.bound = bound;
  r.universe_size = u.size();
  r.strategy = o.strategy;
  r.families_examined = o.examined;
  r.lhs = o.lhs;
  r.rhs = o.rhs;
  r.bijection = o.bijection;
  r.matching = o.matching;
  r.counterexamples = o.counterexamples;
  if (opts.rerun_double) {
    FiniteUniverse u2 = enumerate_universe(ring, 2 * bound);
    VerifyOptions o2 = opts;
    o2.rerun_double = false;
    Outcome big = run(t, u2, o2);
    r.rerun_bound = 2 * bound;
    r.rerun_lhs = big.lhs;
    r.rerun_rhs = big.rhs;
    r.rerun_bijection = big.bijection;
    bool same = big.lhs == o.lhs && big.rhs == o.rhs && big.bijection == o.bijection &&
                big.by_subset.size() == o.by_subset.size();
    for (const auto& [s, fam] : o.by_subset) {
      auto it = big.by_subset.find(s);
      if (it == big.by_subset.end()) {
        same = false;
        continue;
      }
      // the larger family cut down to the small universe
      for (std::size_t i = 0; i < u.size(); ++i) {
        auto j = u2.index_of(u.cls(i));
        if (!j || it->second[*j] != fam[i]) same = false;
      }
    }
    r.bound_stable = same;
  }
  return r;
}

}  // namespace rspec
