#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "rspec/finiverse/universe.hpp"
#include "rspec/kernel/errors.hpp"

namespace rspec {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b, long p) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
  }
  return r;
}

unsigned long ipow(unsigned long b, unsigned e) {
  unsigned long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

ExplicitModule::ExplicitModule(const ArtinianRing& ring, const ModuleClass& c) : ring_(&ring) {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const SpecPoint& pt = ring.spectrum[i];
    for (unsigned e : c.parts[i]) {
      Component comp{i, e, offset, 1, 0, {}};
      if (ring.polynomial) {
        std::vector<long> g = {1};
        for (unsigned k = 0; k < e; ++k) g = poly_mul_mod(g, pt.pi_coeffs, ring.characteristic);
        comp.digits = g.size() - 1;
        comp.modulus = ring.characteristic;
        comp.relation.assign(g.begin(), g.end() - 1);
      } else {
        comp.modulus = static_cast<long>(ipow(static_cast<unsigned long>(pt.pi_coeffs[0]), e));
      }
      for (std::size_t d = 0; d < comp.digits; ++d) radix_.push_back(comp.modulus);
      offset += comp.digits;
      comps_.push_back(comp);
    }
  }
  for (long r : radix_) size_ *= static_cast<std::size_t>(r);
}

std::vector<long> ExplicitModule::decode(std::size_t i) const {
  std::vector<long> d(radix_.size());
  for (std::size_t k = 0; k < radix_.size(); ++k) {
    d[k] = static_cast<long>(i % static_cast<std::size_t>(radix_[k]));
    i /= static_cast<std::size_t>(radix_[k]);
  }
  return d;
}

std::size_t ExplicitModule::encode(const std::vector<long>& d) const {
  std::size_t i = 0;
  for (std::size_t k = radix_.size(); k-- > 0;) i = i * static_cast<std::size_t>(radix_[k]) + static_cast<std::size_t>(d[k]);
  return i;
}

std::size_t ExplicitModule::add(std::size_t a, std::size_t b) const {
  std::vector<long> x = decode(a), y = decode(b);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(x[k] + y[k], radix_[k]);
  return encode(x);
}

std::size_t ExplicitModule::scale(long s, std::size_t a) const {
  std::vector<long> x = decode(a);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(mod(s, radix_[k]) * x[k], radix_[k]);
  return encode(x);
}

std::vector<long> ExplicitModule::mul_x_digits(const std::vector<long>& d) const {
  std::vector<long> r(d);
  for (const auto& c : comps_) {
    long carry = d[c.offset + c.digits - 1];
    for (std::size_t j = c.digits; j-- > 0;) {
      long prev = j == 0 ? 0 : d[c.offset + j - 1];
      r[c.offset + j] = mod(prev - carry * c.relation[j], c.modulus);
    }
  }
  return r;
}

std::size_t ExplicitModule::mul_x(std::size_t a) const {
  if (!ring_->polynomial) throw InvalidArgument("no variable over Z/n");
  return encode(mul_x_digits(decode(a)));
}

std::vector<long> ExplicitModule::act_poly(const std::vector<long>& coeffs, const std::vector<long>& d) const {
  auto scaled = [&](long s) {
    std::vector<long> r(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) r[k] = mod(mod(s, radix_[k]) * d[k], radix_[k]);
    return r;
  };
  std::vector<long> res = scaled(coeffs.back());
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    res = mul_x_digits(res);
    std::vector<long> t = scaled(coeffs[k]);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] = mod(res[i] + t[i], radix_[i]);
  }
  return res;
}

std::size_t ExplicitModule::pi_power(std::size_t point, unsigned j, std::size_t a) const {
  std::vector<long> d = decode(a);
  for (unsigned k = 0; k < j; ++k) d = act_poly(ring_->spectrum[point].pi_coeffs, d);
  return encode(d);
}

std::vector<char> ExplicitModule::span(const std::vector<std::size_t>& gens) const {
  std::vector<std::size_t> w;
  std::vector<char> seen(size_, 0);
  for (std::size_t g : gens) {
    std::size_t cur = g;
    while (!seen[cur]) {
      seen[cur] = 1;
      w.push_back(cur);
      if (!ring_->polynomial) break;
      cur = mul_x(cur);
    }
  }
  std::vector<char> in(size_, 0);
  std::vector<std::size_t> queue = {0};
  in[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t g : w) {
      std::size_t u = add(queue[q], g);
      if (!in[u]) {
        in[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return in;
}

namespace {

// Partition at one point from |ker pi^j| for j = 0..max.
Partition partition_from_counts(const std::vector<unsigned long>& k, unsigned long q) {
  std::vector<unsigned> r;  // r[j-1] = number of parts >= j
  for (std::size_t j = 1; j < k.size(); ++j) {
    unsigned long ratio = k[j] / k[j - 1];
    unsigned e = 0;
    while (ratio > 1) {
      ratio /= q;
      ++e;
    }
    r.push_back(e);
  }
  Partition p;
  unsigned n = r.empty() ? 0 : r[0];
  for (unsigned m = 1; m <= n; ++m) {
    unsigned len = 0;
    for (unsigned x : r) len += x >= m ? 1 : 0;
    p.push_back(len);
  }
  return p;
}

ModuleClass class_from(const ArtinianRing& r, const std::function<unsigned long(std::size_t, unsigned)>& count) {
  ModuleClass c;
  for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
    std::vector<unsigned long> k;
    for (unsigned j = 0; j <= r.spectrum[i].max_exponent; ++j) k.push_back(count(i, j));
    c.parts.push_back(partition_from_counts(k, r.spectrum[i].residue_size));
  }
  return c;
}

}  // namespace

ModuleClass raw_class_of_sub(const ArtinianRing& r, const ExplicitModule& m, const std::vector<char>& sub) {
  return class_from(r, [&](std::size_t i, unsigned j) {
    unsigned long n = 0;
    for (std::size_t v = 0; v < m.size(); ++v) n += sub[v] && m.pi_power(i, j, v) == 0 ? 1 : 0;
    return n;
  });
}

ModuleClass raw_class_of_quotient(const ArtinianRing& r, const ExplicitModule& m, const std::vector<char>& sub) {
  unsigned long order = static_cast<unsigned long>(std::count(sub.begin(), sub.end(), 1));
  return class_from(r, [&](std::size_t i, unsigned j) {
    unsigned long n = 0;
    for (std::size_t v = 0; v < m.size(); ++v) n += sub[m.pi_power(i, j, v)] ? 1 : 0;
    return n / order;
  });
}

namespace {

struct MaskTables {
  std::vector<std::vector<std::size_t>> add;
  std::vector<std::uint64_t> cyclic;
};

MaskTables mask_tables(const ExplicitModule& m) {
  if (m.size() > 64) throw ExplosionGuard("raw submodule search limited to 64 elements");
  MaskTables t;
  t.add.assign(m.size(), std::vector<std::size_t>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) t.add[a][b] = m.add(a, b);
  }
  for (std::size_t v = 0; v < m.size(); ++v) {
    std::vector<char> s = m.span({v});
    std::uint64_t mask = 0;
    for (std::size_t u = 0; u < m.size(); ++u) mask |= s[u] ? (std::uint64_t{1} << u) : 0;
    t.cyclic.push_back(mask);
  }
  return t;
}

std::uint64_t mask_sum(const MaskTables& t, std::uint64_t a, std::uint64_t b, std::size_t n) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a >> i & 1)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b >> j & 1) r |= std::uint64_t{1} << t.add[i][j];
    }
  }
  return r;
}

}  // namespace

std::vector<std::uint64_t> raw_submodules(const ExplicitModule& m) {
  MaskTables t = mask_tables(m);
  std::set<std::uint64_t> seen = {1};
  std::vector<std::uint64_t> out = {1};
  for (std::size_t q = 0; q < out.size(); ++q) {
    std::uint64_t s = out[q];
    for (std::size_t v = 0; v < m.size(); ++v) {
      if ((t.cyclic[v] & ~s) == 0) continue;
      std::uint64_t u = mask_sum(t, s, t.cyclic[v], m.size());
      if (seen.insert(u).second) out.push_back(u);
    }
  }
  return out;
}

bool raw_is_essential(const ExplicitModule& m, std::uint64_t sub) {
  MaskTables t = mask_tables(m);
  for (std::size_t v = 1; v < m.size(); ++v) {
    if ((t.cyclic[v] & sub & ~std::uint64_t{1}) == 0) return false;
  }
  return true;
}

std::optional<bool> raw_subquotient(const ArtinianRing& r, const ModuleClass& p, const ModuleClass& m) {
  std::size_t k = 0;
  for (const auto& part : p.parts) k += part.size();
  if (k == 0) return true;
  ModuleClass x = m;
  for (std::size_t i = 1; i < k; ++i) x = class_sum(x, m);
  ExplicitModule e(r, x);
  if (e.size() > 64) return std::nullopt;
  ExplicitModule pe(r, p);
  static std::mutex mtx;
  static std::map<std::pair<std::string, ModuleClass>, std::vector<std::uint64_t>> cache;
  std::vector<std::uint64_t> subs;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(r.ring->to_string(), x);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, raw_submodules(e)).first;
    subs = it->second;
  }
  const std::size_t target = pe.size();
  std::map<std::pair<std::size_t, unsigned>, std::vector<std::size_t>> pw;
  auto power_row = [&](std::size_t i, unsigned j) -> const std::vector<std::size_t>& {
    auto it = pw.find({i, j});
    if (it != pw.end()) return it->second;
    std::vector<std::size_t> row(e.size());
    for (std::size_t v = 0; v < e.size(); ++v) row[v] = e.pi_power(i, j, v);
    return pw.emplace(std::make_pair(i, j), std::move(row)).first->second;
  };
  for (std::uint64_t big : subs) {
    std::size_t nb = static_cast<std::size_t>(__builtin_popcountll(big));
    for (std::uint64_t small : subs) {
      if ((small & ~big) != 0) continue;
      std::size_t ns = static_cast<std::size_t>(__builtin_popcountll(small));
      if (nb != ns * target) continue;
      ModuleClass c = class_from(r, [&](std::size_t i, unsigned j) {
        const auto& row = power_row(i, j);
        unsigned long n = 0;
        for (std::size_t v = 0; v < e.size(); ++v) n += (big >> v & 1) && (small >> row[v] & 1) ? 1 : 0;
        return n / ns;
      });
      if (c == p) return true;
    }
  }
  return false;
}

}  // namespace rspec
