#include "rspec/cli/dsl.hpp"

#include <cctype>
#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/parse.hpp"
#include "rspec/modules/ops.hpp"

namespace rspec {

namespace {

std::string located(const std::string& source, std::size_t line, std::size_t col, const std::string& msg) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
}

}  // namespace

DslError::DslError(std::string source, std::size_t line, std::size_t column, std::string expected, std::string found)
    : Error(located(source, line, column, "expected " + expected + ", found " + found)),
      source_(std::move(source)), line_(line), column_(column), expected_(std::move(expected)) {}

DslError::DslError(std::string source, std::size_t line, std::size_t column, std::string message)
    : Error(located(source, line, column, message)), source_(std::move(source)), line_(line), column_(column) {}

std::string Provenance::to_string() const {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column);
}

const char* binding_kind_name(BindingKind k) {
  switch (k) {
    case BindingKind::Ring:
      return "ring";
    case BindingKind::Ideal:
      return "ideal";
    case BindingKind::Prime:
      return "prime";
    case BindingKind::Module:
      return "module";
    case BindingKind::Set:
      return "set";
    case BindingKind::Points:
      return "points";
    case BindingKind::GSeq:
      return "gseq";
  }
  return "?";
}

void Workspace::add(Binding b) {
  if (index_.count(b.name))
    throw DslError(b.where.source, b.where.line, b.where.column,
                   "name '" + b.name + "' is already bound at " + bindings_[index_[b.name]].where.to_string());
  index_[b.name] = bindings_.size();
  bindings_.push_back(std::move(b));
}

const Binding* Workspace::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &bindings_[it->second];
}

const Binding& Workspace::get(const std::string& name, BindingKind kind) const {
  const Binding* b = find(name);
  if (!b) throw InvalidArgument("no binding named '" + name + "'");
  if (b->kind != kind)
    throw InvalidArgument("'" + name + "' is a " + binding_kind_name(b->kind) + ", not a " + binding_kind_name(kind));
  return *b;
}

const Binding* Workspace::current_ring() const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->kind == BindingKind::Ring) return &*it;
  }
  return nullptr;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string source, const Workspace* ws)
      : text_(text), source_(std::move(source)), ws_(ws) {}

  std::size_t pos() const { return pos_; }

  std::pair<std::size_t, std::size_t> line_col(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  Provenance here() {
    skip();
    auto [l, c] = line_col(pos_);
    return {source_, l, c};
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip();
    auto [l, c] = line_col(pos_);
    throw DslError(source_, l, c, expected, found());
  }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) {
    auto [l, c] = line_col(at);
    throw DslError(source_, l, c, message);
  }

  void skip() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  void expect(char ch) {
    if (!eat(ch)) fail(std::string("'") + ch + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::optional<std::string> peek_ident() {
    skip();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t e = pos_;
    while (e < text_.size() && ident_char(text_[e])) ++e;
    return std::string(text_.substr(pos_, e - pos_));
  }

  std::string ident(const std::string& what = "a name") {
    auto id = peek_ident();
    if (!id) fail(what);
    pos_ += id->size();
    return *id;
  }

  bool eat_keyword(const std::string& kw) {
    auto id = peek_ident();
    if (!id || *id != kw) return false;
    pos_ += id->size();
    return true;
  }

  void expect_keyword(const std::string& kw) {
    if (!eat_keyword(kw)) fail("'" + kw + "'");
  }

  mpz_class integer() {
    skip();
    std::size_t e = pos_;
    while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
    if (e == pos_) fail("an integer");
    mpz_class v(std::string(text_.substr(pos_, e - pos_)));
    pos_ = e;
    return v;
  }

  bool peek_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string found() {
    if (pos_ >= text_.size()) return "end of input";
    std::size_t e = pos_;
    if (ident_char(text_[e])) {
      while (e < text_.size() && ident_char(text_[e])) ++e;
    } else {
      ++e;
    }
    return "'" + std::string(text_.substr(pos_, e - pos_)) + "'";
  }

  // A polynomial runs to the next top-level separator.
  Poly poly(const Ring& ring) {
    skip();
    std::size_t start = pos_, depth = 0, e = pos_;
    for (; e < text_.size(); ++e) {
      char ch = text_[e];
      if (ch == '(' || ch == '[' || ch == '{') {
        ++depth;
      } else if (ch == ')' || ch == ']' || ch == '}') {
        if (depth == 0) break;
        --depth;
      } else if ((ch == ',' || ch == '\n' || ch == '#') && depth == 0) {
        break;
      }
    }
    std::string_view piece = text_.substr(start, e - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (piece.empty()) fail("a polynomial");
    try {
      Poly p = parse_poly(ring, piece);
      pos_ = start + piece.size();
      return p;
    } catch (const ParseError& err) {
      auto [l, c] = line_col(start + err.offset());
      throw DslError(source_, l, c, err.expected(), err.found());
    }
  }

  std::vector<Poly> poly_list(const Ring& ring, char close) {
    std::vector<Poly> out;
    if (eat(close)) return out;
    do {
      out.push_back(poly(ring));
    } while (eat(','));
    expect(close);
    return out;
  }

  RingPtr ring_spec() {
    std::size_t start = (skip(), pos_);
    RingDescriptor d;
    std::string base = ident("a ring (ZZ, QQ, GF(p), ZZ/n)");
    bool quotient_of_base = false;
    std::vector<Poly> base_quot;
    if (base == "ZZ" || base == "Z") {
      d.base = BaseKind::Integers;
      if (peek() == '/') {
        std::size_t save = pos_;
        ++pos_;
        if (peek_digit()) {
          d.base = BaseKind::IntegersMod;
          d.modulus = integer();
          if (d.modulus < 2) fail_at(save, "modulus must be at least 2");
        } else {
          pos_ = save;
          quotient_of_base = true;
        }
      }
    } else if (base == "QQ" || base == "Q") {
      d.base = BaseKind::Rationals;
    } else if (base == "GF") {
      expect('(');
      d.base = BaseKind::PrimeField;
      d.modulus = integer();
      expect(')');
    } else if (base.size() > 2 && base.rfind("F_", 0) == 0 &&
               base.find_first_not_of("0123456789", 2) == std::string::npos) {
      d.base = BaseKind::PrimeField;
      d.modulus = mpz_class(base.substr(2));
    } else {
      fail_at(start, "unknown ring '" + base + "' (expected ZZ, QQ, GF(p) or ZZ/n)");
    }
    if (d.base == BaseKind::PrimeField && mpz_probab_prime_p(d.modulus.get_mpz_t(), 30) == 0)
      fail_at(start, "GF(" + d.modulus.get_str() + ") needs a prime modulus");
    if (!quotient_of_base && eat('[')) {
      if (!eat(']')) {
        do {
          std::string v = ident("a variable name");
          for (const auto& w : d.vars) {
            if (w == v) fail_at(pos_ - v.size(), "variable '" + v + "' listed twice");
          }
          d.vars.push_back(v);
        } while (eat(','));
        expect(']');
      }
    }
    if (eat('/')) {
      expect('(');
      RingDescriptor amb = d;
      RingPtr a = Ring::make(amb);
      d.quotient = poly_list(*a, ')');
    }
    try {
      return Ring::make(d);
    } catch (const Error& e) {
      fail_at(start, e.what());
    }
  }

  void same_ring(const Binding& b, const RingPtr& ring, std::size_t at) {
    if (!b.ring->same_as(*ring))
      fail_at(at, "'" + b.name + "' belongs to " + b.ring->to_string() + ", not " + ring->to_string());
  }

  const Binding* named(const std::string& id) { return ws_ ? ws_->find(id) : nullptr; }

  // (g1, ..., gk) [assume prime]  or a prime name
  PrimeIdeal prime_ref(const RingPtr& ring) {
    std::size_t at = (skip(), pos_);
    if (auto id = peek_ident()) {
      const Binding* b = named(*id);
      if (!b || b->kind != BindingKind::Prime) fail("a prime literal or prime name");
      pos_ += id->size();
      same_ring(*b, ring, at);
      return *b->prime;
    }
    expect('(');
    Ideal i(ring, poly_list(*ring, ')'));
    if (eat_keyword("assume")) {
      expect_keyword("prime");
      if (i.is_unit()) fail_at(at, "the unit ideal is not prime");
      return PrimeIdeal::assume(i);
    }
    try {
      return PrimeIdeal::certify(i);
    } catch (const InvalidArgument& e) {
      std::string why = e.what();
      if (why.find("assume prime") == std::string::npos) why += " (append 'assume prime' to assert primality)";
      fail_at(at, "uncertified prime: " + why);
    }
  }

  SpecSet set_ref(const RingPtr& ring) {
    std::size_t at = (skip(), pos_);
    if (eat_keyword("closure")) {
      expect('{');
      std::vector<PrimeIdeal> ps;
      if (!eat('}')) {
        do {
          ps.push_back(prime_ref(ring));
        } while (eat(','));
        expect('}');
      }
      return SpecSet::closure(ring, ps);
    }
    auto id = peek_ident();
    const Binding* b = id ? named(*id) : nullptr;
    if (!b || b->kind != BindingKind::Set) fail("'closure{...}' or a set name");
    pos_ += id->size();
    same_ring(*b, ring, at);
    return *b->set;
  }

  PointSet points_ref(const RingPtr& ring) {
    std::size_t at = (skip(), pos_);
    if (eat('{')) {
      std::vector<PrimeIdeal> ps;
      if (!eat('}')) {
        do {
          ps.push_back(prime_ref(ring));
        } while (eat(','));
        expect('}');
      }
      return PointSet::finite(ring, ps);
    }
    if (eat_keyword("all")) {
      try {
        return PointSet::all(ring);
      } catch (const Error& e) {
        fail_at(at, e.what());
      }
    }
    auto id = peek_ident();
    const Binding* b = id ? named(*id) : nullptr;
    if (!b || b->kind != BindingKind::Points) fail("'{...}', 'all' or a points name");
    pos_ += id->size();
    same_ring(*b, ring, at);
    return *b->points;
  }

  ModulePresentation matrix_module(const RingPtr& ring) {
    std::size_t at = (skip(), pos_);
    expect('[');
    std::vector<std::vector<Poly>> rows;
    if (!eat(']')) {
      do {
        std::size_t row_at = (skip(), pos_);
        expect('[');
        rows.push_back(poly_list(*ring, ']'));
        if (rows.back().size() != rows.front().size())
          fail_at(row_at, "arity mismatch: row " + std::to_string(rows.size()) + " has " +
                              std::to_string(rows.back().size()) + " entries, row 1 has " +
                              std::to_string(rows.front().size()));
      } while (eat(','));
      expect(']');
    }
    (void)at;
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::vector<Column> cols(ncols, Column(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < ncols; ++j) cols[j][i] = rows[i][j];
    }
    return ModulePresentation(ring, rows.size(), cols);
  }

  bool names_ring(const std::string& id, const RingPtr& ring) {
    if (id == "R") return true;
    if ((id == "Z" || id == "ZZ") && ring->same_as(*Ring::integers())) return true;
    const Binding* b = named(id);
    return b && b->kind == BindingKind::Ring && b->ring->same_as(*ring);
  }

  ModulePresentation module_term(const RingPtr& ring) {
    std::size_t at = (skip(), pos_);
    if (eat_keyword("coker")) return matrix_module(ring);
    if (eat_keyword("free")) {
      mpz_class n = integer();
      return ModulePresentation::free(ring, n.get_ui());
    }
    if (peek() == '0') {
      ++pos_;
      return ModulePresentation::zero(ring);
    }
    auto id = peek_ident();
    if (!id) fail("a module ('coker [[...]]', 'free n', 'R', 'R/(...)' or a module name)");
    ModulePresentation base = ModulePresentation::zero(ring);
    if (names_ring(*id, ring)) {
      pos_ += id->size();
      if (eat('/')) {
        if (peek_digit()) {
          base = ModulePresentation::cyclic(Ideal(ring, {ring->from_int(integer())}));
        } else {
          expect('(');
          base = ModulePresentation::cyclic(Ideal(ring, poly_list(*ring, ')')));
        }
      } else {
        base = ModulePresentation::free(ring, 1);
      }
    } else {
      const Binding* b = named(*id);
      if (!b || b->kind != BindingKind::Module) fail_at(at, "'" + *id + "' is not a module or ring name");
      pos_ += id->size();
      same_ring(*b, ring, at);
      base = *b->module;
    }
    if (eat('^')) {
      unsigned long k = integer().get_ui();
      std::vector<ModulePresentation> copies(k, base);
      base = direct_sum(copies, ring);
    }
    return base;
  }

  ModulePresentation module_expr(const RingPtr& ring) {
    ModulePresentation m = module_term(ring);
    while (eat('+')) m = direct_sum(m, module_term(ring));
    return m;
  }

  RingPtr require_ring(const Provenance& where) {
    const Binding* r = ws_ ? ws_->current_ring() : nullptr;
    if (!r) throw DslError(where.source, where.line, where.column, "no ring declared yet (start with 'ring R = ...')");
    return r->ring;
  }

  Binding statement(Workspace& ws) {
    ws_ = &ws;
    Provenance where = here();
    std::string kw = ident("a statement (ring, ideal, prime, module, set, points, gseq)");
    Binding b;
    b.where = where;
    static const std::map<std::string, BindingKind> kinds = {
        {"ring", BindingKind::Ring},     {"ideal", BindingKind::Ideal}, {"prime", BindingKind::Prime},
        {"module", BindingKind::Module}, {"set", BindingKind::Set},     {"points", BindingKind::Points},
        {"gseq", BindingKind::GSeq}};
    auto k = kinds.find(kw);
    if (k == kinds.end())
      fail_at(pos_ - kw.size(), "expected a statement (ring, ideal, prime, module, set, points, gseq), found '" + kw + "'");
    b.kind = k->second;
    b.name = ident("a binding name");
    expect('=');
    if (b.kind == BindingKind::Ring) {
      b.ring = ring_spec();
      b.ring_name = b.name;
      return b;
    }
    b.ring = require_ring(where);
    b.ring_name = ws.current_ring()->name;
    switch (b.kind) {
      case BindingKind::Ideal:
        expect('(');
        b.ideal = Ideal(b.ring, poly_list(*b.ring, ')'));
        break;
      case BindingKind::Prime:
        b.prime = prime_ref(b.ring);
        break;
      case BindingKind::Module:
        b.module = module_expr(b.ring);
        break;
      case BindingKind::Set:
        b.set = set_ref(b.ring);
        break;
      case BindingKind::Points:
        b.points = points_ref(b.ring);
        break;
      case BindingKind::GSeq:
        b.gseq = gseq(b);
        break;
      case BindingKind::Ring:
        break;
    }
    return b;
  }

  GSequence gseq(Binding& b) {
    const RingPtr& ring = b.ring;
    expect('(');
    std::vector<SpecSet> ys;
    do {
      ys.push_back(set_ref(ring));
    } while (eat(','));
    expect(')');
    expect_keyword("for");
    std::size_t at = (skip(), pos_);
    std::string g = ident("a generator (the ring or a module name)");
    auto build = [&](const Generator& gen) {
      try {
        return GSequence(ys, gen);
      } catch (const Error& e) {
        fail_at(at, e.what());
      }
    };
    if (names_ring(g, ring)) return build(Generator::ring(ring));
    const Binding* mb = named(g);
    if (!mb || mb->kind != BindingKind::Module) fail_at(at, "'" + g + "' is not a ring or module name");
    same_ring(*mb, ring, at);
    expect_keyword("via");
    expect('[');
    std::vector<Poly> images = poly_list(*ring, ']');
    if (images.size() != mb->module->rank())
      fail_at(at, "arity mismatch: 'via' lists " + std::to_string(images.size()) + " images for " +
                      std::to_string(mb->module->rank()) + " generators");
    b.generator_images = images;
    b.generator_name = g;
    try {
      std::vector<Column> cols;
      for (const auto& p : images) cols.push_back({p});
      ModuleMap epi(*mb->module, ModulePresentation::free(ring, 1), Matrix(1, cols));
      return build(Generator::with_epimorphism(*mb->module, epi));
    } catch (const DslError&) {
      throw;
    } catch (const Error& e) {
      fail_at(at, e.what());
    }
  }

  void finish(const std::string& what) {
    if (!at_end()) fail(what);
  }

  void set_workspace(const Workspace* ws) { ws_ = ws; }

 private:
  std::string_view text_;
  std::string source_;
  const Workspace* ws_;
  std::size_t pos_ = 0;
};

}  // namespace

Workspace parse_workspace(std::string_view text, const std::string& source) {
  Workspace ws;
  Parser p(text, source, &ws);
  while (!p.at_end()) {
    Binding b = p.statement(ws);
    p.eat(';');
    ws.add(std::move(b));
  }
  return ws;
}

RingPtr parse_ring_spec(std::string_view text) {
  Parser p(text, "<ring>", nullptr);
  RingPtr r = p.ring_spec();
  p.finish("end of ring");
  return r;
}

ModulePresentation parse_module_expr(const Workspace& ws, const RingPtr& ring, std::string_view text) {
  Parser p(text, "<module>", &ws);
  ModulePresentation m = p.module_expr(ring);
  p.finish("end of module expression");
  return m;
}

PrimeIdeal parse_prime_ref(const Workspace& ws, const RingPtr& ring, std::string_view text) {
  Parser p(text, "<prime>", &ws);
  PrimeIdeal q = p.prime_ref(ring);
  p.finish("end of prime");
  return q;
}

SpecSet parse_set_ref(const Workspace& ws, const RingPtr& ring, std::string_view text) {
  Parser p(text, "<set>", &ws);
  SpecSet s = p.set_ref(ring);
  p.finish("end of set");
  return s;
}

PointSet parse_points_ref(const Workspace& ws, const RingPtr& ring, std::string_view text) {
  Parser p(text, "<points>", &ws);
  PointSet s = p.points_ref(ring);
  p.finish("end of point set");
  return s;
}

std::string module_expr_string(const ModulePresentation& m) {
  const Ring& r = *m.ring();
  std::ostringstream os;
  os << "coker [";
  for (std::size_t i = 0; i < m.rank(); ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < m.relations().size(); ++j) os << (j ? ", " : "") << r.element_to_string(m.relations()[j][i]);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string prime_literal(const PrimeIdeal& p) {
  std::string s = p.to_string();
  if (p.certification() == Certification::Asserted) s += " assume prime";
  return s;
}

std::string set_literal(const SpecSet& s) {
  std::string out = "closure{";
  for (std::size_t i = 0; i < s.generators().size(); ++i) out += (i ? ", " : "") + prime_literal(s.generators()[i]);
  return out + "}";
}

std::string points_literal(const PointSet& s) {
  if (s.is_all()) return "all";
  std::string out = "{";
  for (std::size_t i = 0; i < s.points().size(); ++i) out += (i ? ", " : "") + prime_literal(s.points()[i]);
  return out + "}";
}

std::string print_workspace(const Workspace& ws) {
  std::ostringstream os;
  for (const auto& b : ws.bindings()) {
    os << binding_kind_name(b.kind) << " " << b.name << " = ";
    switch (b.kind) {
      case BindingKind::Ring:
        os << b.ring->to_string();
        break;
      case BindingKind::Ideal:
        os << b.ideal->to_string();
        break;
      case BindingKind::Prime:
        os << prime_literal(*b.prime);
        break;
      case BindingKind::Module:
        os << module_expr_string(*b.module);
        break;
      case BindingKind::Set:
        os << set_literal(*b.set);
        break;
      case BindingKind::Points:
        os << points_literal(*b.points);
        break;
      case BindingKind::GSeq: {
        os << "(";
        const auto& ys = b.gseq->sets();
        for (std::size_t i = 0; i < ys.size(); ++i) os << (i ? ", " : "") << set_literal(ys[i]);
        os << ") for ";
        if (b.generator_name.empty()) {
          os << b.ring_name;
        } else {
          os << b.generator_name << " via [";
          for (std::size_t i = 0; i < b.generator_images.size(); ++i)
            os << (i ? ", " : "") << b.ring->element_to_string(b.generator_images[i]);
          os << "]";
        }
        break;
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace rspec
