#include "rspec/kernel/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rspec/kernel/errors.hpp"

namespace rspec {

MVec ModuleArith::add(const MVec& a, const MVec& b) const {
  MVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i], b[j]);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
    } else {
      mpq_class s = pa_.normalize(a[i].coef + b[j].coef);
      if (s != 0) r.push_back({a[i].comp, a[i].exp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

MVec ModuleArith::sub_mul(const MVec& a, const mpq_class& c, const Exponents& e, const MVec& b) const {
  MVec shifted;
  shifted.reserve(b.size());
  for (const auto& t : b) {
    mpq_class v = pa_.normalize(-c * t.coef);
    if (v != 0) shifted.push_back({t.comp, exp_add(t.exp, e), v});
  }
  return add(a, shifted);
}

MVec ModuleArith::scale(const MVec& a, const mpq_class& c) const {
  MVec r;
  mpq_class cn = pa_.normalize(c);
  if (cn == 0) return r;
  r.reserve(a.size());
  for (const auto& t : a) {
    mpq_class v = pa_.normalize(t.coef * cn);
    if (v != 0) r.push_back({t.comp, t.exp, v});
  }
  return r;
}

MVec ModuleArith::monic(const MVec& a) const {
  if (a.empty()) return a;
  return scale(a, pa_.coeffs().inverse(a.front().coef));
}

MVec ModuleArith::from_terms(std::vector<MTerm> terms) const {
  std::sort(terms.begin(), terms.end(), [this](const MTerm& x, const MTerm& y) { return compare(x, y) > 0; });
  MVec r;
  for (auto& t : terms) {
    if (!r.empty() && r.back().comp == t.comp && r.back().exp == t.exp) {
      r.back().coef += t.coef;
    } else {
      if (!r.empty()) {
        r.back().coef = pa_.normalize(r.back().coef);
        if (r.back().coef == 0) r.pop_back();
      }
      r.push_back(std::move(t));
    }
  }
  if (!r.empty()) {
    r.back().coef = pa_.normalize(r.back().coef);
    if (r.back().coef == 0) r.pop_back();
  }
  return r;
}

MVec ModuleArith::embed(const Poly& p, int comp) const {
  MVec r;
  r.reserve(p.terms.size());
  for (const auto& t : p.terms) r.push_back({comp, t.exp, t.coef});
  return r;
}

Poly ModuleArith::component(const MVec& v, int comp) const {
  Poly p;
  for (const auto& t : v) {
    if (t.comp == comp) p.terms.push_back({t.exp, t.coef});
  }
  return p;
}

namespace {

const MVec* find_reducer(const MTerm& t, const std::vector<MVec>& basis) {
  for (const auto& g : basis) {
    if (!g.empty() && g.front().comp == t.comp && divides(g.front().exp, t.exp)) return &g;
  }
  return nullptr;
}

}  // namespace

MVec normal_form(const PolyArith& pa, const MVec& f, const std::vector<MVec>& basis) {
  ModuleArith ma(pa);
  MVec rem;
  MVec h = f;
  while (!h.empty()) {
    const MTerm& lt = h.front();
    if (const MVec* g = find_reducer(lt, basis)) {
      const MTerm& glt = g->front();
      mpq_class q = pa.normalize(lt.coef * pa.coeffs().inverse(glt.coef));
      h = ma.sub_mul(h, q, exp_sub(lt.exp, glt.exp), *g);
    } else {
      rem.push_back(lt);
      h.erase(h.begin());
    }
  }
  return rem;
}

Poly normal_form(const PolyArith& pa, const Poly& f, const std::vector<MVec>& basis) {
  ModuleArith ma(pa);
  return ma.component(normal_form(pa, ma.embed(f, 0), basis), 0);
}

namespace {

struct Pair {
  std::size_t i, j;
  MTerm lcm;  // coefficient unused
};

class Buchberger {
 public:
  Buchberger(const PolyArith& pa, GroebnerStats* stats) : pa_(pa), ma_(pa), stats_(stats) {}

  std::vector<MVec> run(const std::vector<MVec>& gens) {
    rank_one_ = std::all_of(gens.begin(), gens.end(), [](const MVec& v) {
      return std::all_of(v.begin(), v.end(), [](const MTerm& t) { return t.comp == 0; });
    });
    for (const auto& g : gens) {
      MVec h = ma_.monic(normal_form(pa_, g, basis_));
      if (!h.empty()) insert(std::move(h));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        int c = ma_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      pending_.erase({p.i, p.j});
      if (stats_) ++stats_->pairs_considered;
      if (chain_criterion(p)) {
        if (stats_) ++stats_->chain_skips;
        continue;
      }
      if (stats_) ++stats_->pairs_reduced;
      MVec s = spoly(basis_[p.i], basis_[p.j], p.lcm.exp);
      MVec h = ma_.monic(normal_form(pa_, s, basis_));
      if (!h.empty()) insert(std::move(h));
    }
    return reduce();
  }

 private:
  MVec spoly(const MVec& f, const MVec& g, const Exponents& l) const {
    MVec a = ma_.sub_mul({}, -1, exp_sub(l, f.front().exp), f);
    mpq_class c = pa_.normalize(f.front().coef * pa_.coeffs().inverse(g.front().coef));
    return ma_.sub_mul(a, c, exp_sub(l, g.front().exp), g);
  }

  void insert(MVec h) {
    std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    const MTerm& lk = basis_[k].front();
    for (std::size_t i = 0; i < k; ++i) {
      const MTerm& li = basis_[i].front();
      if (li.comp != lk.comp) continue;
      Exponents l = lcm(li.exp, lk.exp);
      if (rank_one_ && l == exp_add(li.exp, lk.exp)) {
        if (stats_) ++stats_->product_skips;
        continue;
      }
      pairs_.push_back({i, k, {lk.comp, std::move(l), 0}});
      pending_.insert({i, k});
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  // Skip (i,j) when some k has lm(k) | lcm(i,j) and neither (i,k) nor (j,k)
  // is still pending.
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const MTerm& lk = basis_[k].front();
      if (lk.comp != p.lcm.comp || !divides(lk.exp, p.lcm.exp)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  }

  std::vector<MVec> reduce() {
    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<MVec> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const MTerm& li = basis_[i].front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const MTerm& lj = basis_[j].front();
        if (lj.comp != li.comp || !divides(lj.exp, li.exp)) continue;
        if (lj.exp != li.exp || j < i) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<MVec> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MVec> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      MVec tail(minimal[i].begin() + 1, minimal[i].end());
      MVec r = normal_form(pa_, tail, others);
      r.insert(r.begin(), minimal[i].front());
      reduced.push_back(ma_.monic(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [this](const MVec& a, const MVec& b) { return ma_.compare(a.front(), b.front()) < 0; });
    return reduced;
  }

  const PolyArith& pa_;
  ModuleArith ma_;
  GroebnerStats* stats_;
  bool rank_one_ = true;
  std::vector<MVec> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

std::vector<MVec> groebner_basis(const PolyArith& pa, const std::vector<MVec>& gens, GroebnerStats* stats) {
  if (!pa.coeffs().is_field()) throw UnsupportedRing("Groebner bases require field coefficients");
  return Buchberger(pa, stats).run(gens);
}

}  // namespace rspec
