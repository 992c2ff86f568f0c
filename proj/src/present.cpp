#include "hopflift/present.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hopflift/expr.hpp"

namespace hopflift {

// ---------------------------------------------------------------- Poly

Poly Poly::word(const Word& w, const Scalar& c) {
  Poly p;
  p.add(w, c);
  return p;
}

void Poly::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void Poly::add(const Poly& p, const Scalar& f) {
  if (f.is_zero()) return;
  for (const auto& [w, c] : p.terms) add(w, f.is_one() ? c : f * c);
}

std::optional<Scalar> Poly::constant() const {
  if (terms.empty()) return Scalar(0);
  if (terms.size() == 1 && terms.begin()->first.empty()) return terms.begin()->second;
  return std::nullopt;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [w, c] : terms) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, c] : a.terms)
    for (const auto& [v, d] : b.terms) out.add(u + v, c * d);
  return out;
}

// ---------------------------------------------------------------- TensorPoly

TensorPoly TensorPoly::from_poly(const Poly& p) {
  TensorPoly t(1);
  for (const auto& [w, c] : p.terms) t.terms.emplace(std::vector<Word>{w}, c);
  return t;
}

TensorPoly TensorPoly::one(std::size_t k) {
  TensorPoly t(k);
  t.terms.emplace(std::vector<Word>(k), Scalar(1));
  return t;
}

void TensorPoly::add(const std::vector<Word>& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void TensorPoly::add(const TensorPoly& t, const Scalar& f) {
  if (t.arity != arity && !t.terms.empty()) throw PresentationError("tensor arity mismatch");
  for (const auto& [w, c] : t.terms) add(w, f * c);
}

Poly TensorPoly::to_poly() const {
  if (arity != 1) throw PresentationError("expected a polynomial, found a tensor");
  Poly p;
  for (const auto& [w, c] : terms) p.add(w[0], c);
  return p;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  if (a.arity != b.arity) throw PresentationError("tensor arity mismatch in product");
  TensorPoly out(a.arity);
  for (const auto& [u, c] : a.terms)
    for (const auto& [v, d] : b.terms) {
      std::vector<Word> w(a.arity);
      for (std::size_t i = 0; i < a.arity; ++i) w[i] = u[i] + v[i];
      out.add(w, c * d);
    }
  return out;
}

TensorPoly outer(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out(a.arity + b.arity);
  for (const auto& [u, c] : a.terms)
    for (const auto& [v, d] : b.terms) {
      std::vector<Word> w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, c * d);
    }
  return out;
}

// ---------------------------------------------------------------- order

int MonomialOrder::compare(const Word& u, const Word& v) const {
  auto is_mod = [this](char ch) { return static_cast<unsigned char>(ch) < m_; };
  auto count = [&](const Word& w) { return std::count_if(w.begin(), w.end(), is_mod); };
  auto cu = count(u);
  auto cv = count(v);
  if (cu != cv) return cu < cv ? -1 : 1;
  // positions of module letters, compared lexicographically
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    while (i < u.size() && !is_mod(u[i])) ++i;
    while (j < v.size() && !is_mod(v[j])) ++j;
    if (i >= u.size() || j >= v.size()) break;
    if (i != j) return i < j ? -1 : 1;
    ++i;
    ++j;
  }
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  Word mu;
  Word mv;
  for (char ch : u)
    if (is_mod(ch)) mu += ch;
  for (char ch : v)
    if (is_mod(ch)) mv += ch;
  if (int c = mu.compare(mv)) return c < 0 ? -1 : 1;
  int c = u.compare(v);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

const Word* leading(const Poly& p, const MonomialOrder& ord) {
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms)
    if (!best || ord.less(*best, w)) best = &w;
  return best;
}

}  // namespace

// ---------------------------------------------------------------- rewriting

class Rewriter {
 public:
  explicit Rewriter(const std::vector<Rule>& rules) : rules_(rules) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      index_.emplace(rules_[i].lhs, i);
      maxlen_ = std::max(maxlen_, rules_[i].lhs.size());
    }
  }

  Poly nf(const Word& w) {
    std::lock_guard lock(mu_);
    steps_ = 0;
    return nf_word(w);
  }

  Poly nf(const Poly& p) {
    std::lock_guard lock(mu_);
    steps_ = 0;
    Poly out;
    for (const auto& [w, c] : p.terms) out.add(nf_word(w), c);
    return out;
  }

  bool irreducible(const Word& w) const {
    for (std::size_t start = 0; start < w.size(); ++start)
      for (std::size_t l = 1; l <= maxlen_ && start + l <= w.size(); ++l)
        if (index_.count(w.substr(start, l))) return false;
    return true;
  }

  /// Does some rule's lhs end exactly at the end of w?
  bool reducible_suffix(const Word& w) const {
    for (std::size_t l = 1; l <= maxlen_ && l <= w.size(); ++l)
      if (index_.count(w.substr(w.size() - l))) return true;
    return false;
  }

 private:
  static constexpr std::size_t kStepLimit = 50'000'000;

  std::optional<std::size_t> match_prefix(const Word& v) const {
    for (std::size_t l = 1; l <= maxlen_ && l <= v.size(); ++l) {
      auto it = index_.find(v.substr(0, l));
      if (it != index_.end()) return it->second;
    }
    return std::nullopt;
  }

  // v[1:] is irreducible, so any redex starts at position 0.
  const Poly& head(const Word& v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    Poly result;
    if (auto r = match_prefix(v)) {
      if (++steps_ > kStepLimit) throw RewriteLimitError("rewriting exceeded the step guard");
      const Rule& rule = rules_[*r];
      Word rest = v.substr(rule.lhs.size());
      for (const auto& [w, c] : rule.rhs.terms) result.add(nf_word(w + rest), c);
    } else {
      result = Poly::word(v);
    }
    return memo_.emplace(v, std::move(result)).first->second;
  }

  const Poly& nf_word(const Word& u) {
    if (auto it = memo_.find(u); it != memo_.end()) return it->second;
    if (u.size() <= 1) return head(u);
    Word rest = u.substr(1);
    const Poly& tail = nf_word(rest);
    if (tail.terms.size() == 1 && tail.terms.begin()->first == rest && tail.terms.begin()->second.is_one())
      return head(u);
    Poly result;
    for (const auto& [t, c] : tail.terms) result.add(head(u[0] + t), c);
    return memo_.emplace(u, std::move(result)).first->second;
  }

  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t> index_;
  std::size_t maxlen_ = 0;
  std::unordered_map<Word, Poly> memo_;
  std::size_t steps_ = 0;
  std::mutex mu_;
};

// ---------------------------------------------------------------- Presentation

GenKind Presentation::kind(char letter) const {
  return static_cast<unsigned char>(letter) < order_.module_letters() ? GenKind::module : GenKind::group;
}

std::optional<char> Presentation::letter(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<char>(i);
  return std::nullopt;
}

Word Presentation::word(const std::vector<std::string>& names) const {
  Word w;
  for (const auto& n : names) {
    auto l = letter(n);
    if (!l) throw PresentationError("unknown generator " + n);
    w += *l;
  }
  return w;
}

Poly Presentation::gen(std::string_view name) const {
  auto l = letter(name);
  if (!l) throw PresentationError("unknown generator " + std::string(name));
  return Poly::word(Word(1, *l));
}

bool Presentation::has_bialgebra_data() const {
  return delta_.size() == names_.size() && eps_.size() == names_.size();
}

Poly Presentation::normal_form(const Poly& p) const { return rw_->nf(p); }
Poly Presentation::normal_form(const Word& w) const { return rw_->nf(w); }

TensorPoly Presentation::normal_form(const TensorPoly& t) const {
  TensorPoly out(t.arity);
  for (const auto& [ws, c] : t.terms) {
    std::vector<std::pair<std::vector<Word>, Scalar>> acc{{{}, c}};
    for (const Word& w : ws) {
      Poly n = rw_->nf(w);
      std::vector<std::pair<std::vector<Word>, Scalar>> next;
      for (const auto& [prefix, pc] : acc)
        for (const auto& [nw, nc] : n.terms) {
          auto v = prefix;
          v.push_back(nw);
          next.emplace_back(std::move(v), pc * nc);
        }
      acc = std::move(next);
    }
    for (const auto& [v, vc] : acc) out.add(v, vc);
  }
  return out;
}

bool Presentation::is_irreducible(const Word& w) const { return rw_->irreducible(w); }

std::string Presentation::str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (char ch : w) {
    if (!out.empty()) out += '*';
    out += name(ch);
  }
  return out;
}

namespace {

// Appends one signed term; `first` controls the leading separator.
void append_term(std::string& out, const Scalar& c, const std::string& body, bool first) {
  bool negative = c.is_rational() && sgn(c.re()) < 0;
  Scalar mag = negative ? -c : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  std::string coef = mag.is_rational() ? mag.str() : "(" + mag.str() + ")";
  if (body.empty()) {
    out += coef;
  } else if (mag.is_one()) {
    out += body;
  } else {
    out += coef + "*" + body;
  }
}

}  // namespace

std::string Presentation::str(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Word, Scalar>> ts(p.terms.begin(), p.terms.end());
  std::sort(ts.begin(), ts.end(), [this](const auto& x, const auto& y) { return order_.less(y.first, x.first); });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : ts) {
    append_term(out, c, w.empty() ? std::string() : str(w), first);
    first = false;
  }
  return out;
}

std::string Presentation::str(const TensorPoly& t) const {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ws, c] : t.terms) {
    std::string body;
    for (std::size_t i = 0; i < ws.size(); ++i) body += (i ? " @ " : "") + str(ws[i]);
    append_term(out, c, body, first);
    first = false;
  }
  return out;
}

std::string Presentation::dsl() const {
  std::ostringstream os;
  os << "gens:";
  for (std::size_t i = order_.module_letters(); i < names_.size(); ++i) os << ' ' << names_[i];
  os << " |";
  for (std::size_t i = 0; i < order_.module_letters(); ++i) os << ' ' << names_[i];
  os << '\n';
  for (const auto& r : rules_) os << "rel: " << str(r.lhs) << " -> " << str(r.rhs) << '\n';
  for (const auto& [l, t] : delta_) os << "coprod: " << name(l) << " = " << str(t) << '\n';
  for (const auto& [l, s] : eps_) {
    std::string v;
    append_term(v, s, {}, true);
    os << "counit: " << name(l) << " = " << v << '\n';
  }
  for (const auto& [l, p] : antipode_) os << "antipode: " << name(l) << " = " << str(p) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- builder

PresentationBuilder::PresentationBuilder(const std::vector<std::string>& group_gens,
                                         const std::vector<std::string>& module_gens) {
  std::vector<std::string> names = module_gens;
  names.insert(names.end(), group_gens.begin(), group_gens.end());
  if (names.size() > 120) throw PresentationError("too many generators");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw PresentationError("duplicate generator " + names[i]);
  p_.names_ = std::move(names);
  p_.order_ = MonomialOrder(module_gens.size());
  p_.rw_ = std::make_shared<Rewriter>(std::vector<Rule>{});
}

char PresentationBuilder::letter_or_throw(std::string_view name) const {
  auto l = p_.letter(name);
  if (!l) throw PresentationError("unknown generator " + std::string(name));
  return *l;
}

void PresentationBuilder::insert(Poly p, const std::string& label) {
  while (!p.is_zero()) {
    Word lead = *leading(p, p_.order_);
    if (lead.empty()) throw InconsistentError("relations are inconsistent (1 = 0) at " + label);
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      p *= p.terms.at(lead).inverse();
      pivots_.emplace(lead, std::move(p));
      return;
    }
    Scalar c = p.terms.at(lead);
    p.add(it->second, -c);
  }
}

void PresentationBuilder::equation(const Poly& lhs_minus_rhs, const std::string& label) {
  insert(lhs_minus_rhs, label);
}

void PresentationBuilder::rule(const Word& lhs, const Poly& rhs, const std::string& label) {
  for (const auto& [w, c] : rhs.terms)
    if (!p_.order_.less(w, lhs))
      throw OrientationError("relation " + (label.empty() ? p_.str(lhs) : label) + " is not oriented: " +
                             p_.str(w) + " is not smaller than " + p_.str(lhs));
  insert(Poly::word(lhs) - rhs, label.empty() ? p_.str(lhs) : label);
}

void PresentationBuilder::coproduct(std::string_view gen, const TensorPoly& value) {
  if (value.arity != 2 && !value.is_zero()) throw PresentationError("coproduct of " + std::string(gen) + " is not a 2-tensor");
  TensorPoly v = value;
  v.arity = 2;
  p_.delta_[letter_or_throw(gen)] = std::move(v);
}

void PresentationBuilder::counit(std::string_view gen, const Scalar& value) {
  p_.eps_[letter_or_throw(gen)] = value;
}

void PresentationBuilder::antipode(std::string_view gen, const Poly& value) {
  p_.antipode_[letter_or_throw(gen)] = value;
}

Presentation PresentationBuilder::build() {
  Presentation out = p_;
  out.rules_.clear();
  for (const auto& [lead, p] : pivots_) {
    Poly rhs = p;
    rhs.terms.erase(lead);
    rhs *= Scalar(-1);
    out.rules_.push_back({lead, std::move(rhs)});
  }
  out.rw_ = std::make_shared<Rewriter>(out.rules_);
  // Keep the generator data in normal form.
  for (auto& [l, t] : out.delta_) t = out.normal_form(t);
  for (auto& [l, s] : out.antipode_) s = out.normal_form(s);
  return out;
}

// ---------------------------------------------------------------- DSL

namespace {

struct DslOps {
  using Value = TensorPoly;
  const Presentation* pres = nullptr;
  const std::map<std::string, Scalar>* params = nullptr;
  expr::Cursor* cur = nullptr;

  static TensorPoly constant(const Scalar& s) {
    TensorPoly t(1);
    t.add(std::vector<Word>{Word{}}, s);
    return t;
  }
  static std::optional<Scalar> as_constant(const TensorPoly& t) {
    if (t.arity != 1) return std::nullopt;
    if (t.terms.empty()) return Scalar(0);
    if (t.terms.size() == 1 && t.terms.begin()->first[0].empty()) return t.terms.begin()->second;
    return std::nullopt;
  }

  Value number(const std::string& digits) { return constant(Scalar(mpq_class(digits))); }
  Value ident(const expr::Token& tok, const expr::Cursor& c) {
    if (auto it = params->find(tok.text); it != params->end()) return constant(it->second);
    if (pres) {
      if (auto l = pres->letter(tok.text)) {
        TensorPoly t(1);
        t.add(std::vector<Word>{Word(1, *l)}, Scalar(1));
        return t;
      }
    }
    if (tok.text == "x") return constant(Scalar::xi());
    c.fail("unknown identifier '" + tok.text + "'");
  }
  Value scaled(const TensorPoly& t, const Scalar& s) {
    TensorPoly out(t.arity);
    out.add(t, s);
    return out;
  }
  Value add(const Value& a, const Value& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.arity != b.arity) cur->fail("cannot add tensors of different arity");
    Value out = a;
    out.add(b);
    return out;
  }
  Value neg(const Value& a) { return scaled(a, Scalar(-1)); }
  Value sub(const Value& a, const Value& b) { return add(a, neg(b)); }
  Value mul(const Value& a, const Value& b) {
    if (auto s = as_constant(a)) return scaled(b, *s);
    if (auto s = as_constant(b)) return scaled(a, *s);
    if (a.arity != b.arity) cur->fail("cannot multiply tensors of different arity");
    return a * b;
  }
  Value tensor(const Value& a, const Value& b) { return outer(a, b); }
  Value div(const Value& a, const Value& b, const expr::Cursor& c) {
    auto s = as_constant(b);
    if (!s) c.fail("divisor must be a scalar");
    if (s->is_zero()) c.fail("division by zero");
    return scaled(a, s->inverse());
  }
  Value pow(const Value& v, unsigned e) {
    Value out = constant(Scalar(1));
    if (v.arity != 1) out = TensorPoly::one(v.arity);
    for (unsigned i = 0; i < e; ++i) out = mul(out, v);
    return out;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct LineParser {
  const Presentation* pres;
  std::map<std::string, Scalar>* params;
  std::size_t line;

  TensorPoly eval(std::string_view text, std::size_t col0) {
    expr::Cursor cur(expr::tokenize(text, line, col0), line);
    DslOps ops{pres, params, &cur};
    expr::Parser<DslOps> parser(cur, ops);
    if (cur.at(expr::Tok::End)) cur.fail("empty expression");
    TensorPoly v = parser.sum();
    if (!cur.at(expr::Tok::End)) cur.fail("unexpected token '" + cur.peek().text + "'");
    return v;
  }

  Poly eval_poly(std::string_view text, std::size_t col0) {
    TensorPoly t = eval(text, col0);
    if (t.arity != 1) throw ParseError("expected a polynomial, found a tensor", line, col0 + 1);
    return t.to_poly();
  }
};

// Splits "lhs SEP rhs", returning column offsets (0-based) of both parts.
bool split_at(std::string_view body, std::string_view sep, std::string_view& lhs, std::string_view& rhs,
              std::size_t& rhs_offset) {
  auto pos = body.find(sep);
  if (pos == std::string_view::npos) return false;
  lhs = body.substr(0, pos);
  rhs = body.substr(pos + sep.size());
  rhs_offset = pos + sep.size();
  return true;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<PresentationBuilder> builder;
  std::map<std::string, Scalar> params;
  std::vector<std::pair<std::size_t, std::string>> deferred;  // Hopf lines after gens

  std::size_t line_no = 0;
  std::size_t start = 0;
  auto need_gens = [&](std::size_t line) {
    if (!builder) throw ParseError("'gens:' must come first", line, 1);
  };

  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t indent = raw.find_first_not_of(" \t\r");
    std::string_view body = raw.substr(indent);

    if (body.rfind("param", 0) == 0 && body.size() > 5 && std::isspace(static_cast<unsigned char>(body[5]))) {
      std::string_view lhs;
      std::string_view rhs;
      std::size_t off = 0;
      if (!split_at(body, "=", lhs, rhs, off)) throw ParseError("expected '=' in param", line_no, indent + 1);
      std::string name(trim(lhs.substr(5)));
      if (name.empty()) throw ParseError("missing parameter name", line_no, indent + 6);
      LineParser lp{builder ? &builder->scratch() : nullptr, &params, line_no};
      TensorPoly v = lp.eval(rhs, indent + off);
      auto s = DslOps::as_constant(v);
      if (!s) throw ParseError("parameter value must be a scalar", line_no, indent + off + 1);
      params[name] = *s;
      if (builder) builder->param(name, *s);
      if (end == text.size()) break;
      continue;
    }

    auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'keyword:'", line_no, indent + 1);
    std::string key(trim(body.substr(0, colon)));
    std::string_view rest = body.substr(colon + 1);
    std::size_t rest_off = indent + colon + 1;

    if (key == "gens") {
      if (builder) throw ParseError("duplicate 'gens:' line", line_no, indent + 1);
      std::string_view grp = rest;
      std::string_view mod;
      std::size_t off = 0;
      split_at(rest, "|", grp, mod, off);
      auto words = [](std::string_view s) {
        std::vector<std::string> out;
        std::istringstream is{std::string(s)};
        for (std::string w; is >> w;) out.push_back(w);
        return out;
      };
      auto g = words(grp);
      auto m = words(mod);
      for (const auto& n : g)
        if (params.count(n)) throw ParseError("generator " + n + " shadows a parameter", line_no, indent + 1);
      try {
        builder.emplace(g, m);
      } catch (const PresentationError& e) {
        throw ParseError(e.what(), line_no, indent + 1);
      }
      for (const auto& [n, v] : params) builder->param(n, v);
    } else if (key == "rel") {
      need_gens(line_no);
      std::string_view lhs;
      std::string_view rhs;
      std::size_t off = 0;
      if (!split_at(rest, "->", lhs, rhs, off)) throw ParseError("expected '->' in rel", line_no, rest_off + 1);
      LineParser lp{&builder->scratch(), &params, line_no};
      Poly l = lp.eval_poly(lhs, rest_off);
      Poly r = lp.eval_poly(rhs, rest_off + off);
      if (l.terms.size() != 1 || !l.terms.begin()->second.is_one())
        throw ParseError("left side of a rule must be a single word", line_no, rest_off + 1);
      std::string label = std::string(trim(body));
      builder->rule(l.terms.begin()->first, r, label);
    } else if (key == "eq") {
      need_gens(line_no);
      std::string_view lhs;
      std::string_view rhs;
      std::size_t off = 0;
      if (!split_at(rest, "=", lhs, rhs, off)) throw ParseError("expected '=' in eq", line_no, rest_off + 1);
      LineParser lp{&builder->scratch(), &params, line_no};
      Poly l = lp.eval_poly(lhs, rest_off);
      Poly r = lp.eval_poly(rhs, rest_off + off);
      builder->equation(l - r, std::string(trim(body)));
    } else if (key == "coprod" || key == "counit" || key == "antipode") {
      need_gens(line_no);
      std::string_view lhs;
      std::string_view rhs;
      std::size_t off = 0;
      if (!split_at(rest, "=", lhs, rhs, off)) throw ParseError("expected '=' in " + key, line_no, rest_off + 1);
      std::string gen(trim(lhs));
      if (!builder->scratch().letter(gen)) throw ParseError("unknown generator '" + gen + "'", line_no, rest_off + 1);
      LineParser lp{&builder->scratch(), &params, line_no};
      TensorPoly v = lp.eval(rhs, rest_off + off);
      if (key == "coprod") {
        if (v.arity != 2) throw ParseError("coproduct must be a sum of 'left @ right' terms", line_no, rest_off + off + 1);
        builder->coproduct(gen, v);
      } else if (key == "counit") {
        auto s = DslOps::as_constant(v);
        if (!s) throw ParseError("counit must be a scalar", line_no, rest_off + off + 1);
        builder->counit(gen, *s);
      } else {
        if (v.arity != 1) throw ParseError("antipode must be a polynomial", line_no, rest_off + off + 1);
        builder->antipode(gen, v.to_poly());
      }
    } else {
      throw ParseError("unknown keyword '" + key + "'", line_no, indent + 1);
    }
    if (end == text.size()) break;
  }
  if (!builder) throw ParseError("missing 'gens:' line", line_no, 1);
  return builder->build();
}

Poly parse_poly(const Presentation& p, std::string_view text) {
  std::map<std::string, Scalar> params = p.params();
  LineParser lp{&p, &params, 1};
  return p.normal_form(lp.eval_poly(text, 0));
}

// ---------------------------------------------------------------- confluence

bool OverlapReport::confluent() const { return failures() == 0; }

std::size_t OverlapReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(overlaps.begin(), overlaps.end(), [](const Overlap& o) { return !o.difference.is_zero(); }));
}

OverlapReport confluence_check(const Presentation& p) {
  OverlapReport rep;
  const auto& rules = p.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& a = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& b = rules[j].lhs;
      // a = x y, b = y z with y nonempty and x, z nonempty.
      for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
        if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
        Word x = a.substr(0, a.size() - k);
        Word z = b.substr(k);
        Poly left = p.normal_form(rules[i].rhs * Poly::word(z));
        Poly right = p.normal_form(Poly::word(x) * rules[j].rhs);
        rep.overlaps.push_back({a + z, i, j, false, left - right});
      }
      // b strictly inside a.
      if (i != j && b.size() < a.size()) {
        for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
          if (a.compare(pos, b.size(), b) != 0) continue;
          Poly left = p.normal_form(rules[i].rhs);
          Poly right = p.normal_form(Poly::word(a.substr(0, pos)) * rules[j].rhs *
                                     Poly::word(a.substr(pos + b.size())));
          rep.overlaps.push_back({a, i, j, true, left - right});
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- basis

BasisResult enumerate_basis(const Presentation& p, std::size_t word_bound) {
  BasisResult res;
  std::vector<Word> level{Word{}};
  res.words.push_back(Word{});
  const std::size_t n = p.num_letters();
  Rewriter probe(p.rules());
  while (!level.empty()) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (std::size_t l = 0; l < n; ++l) {
        Word v = w + static_cast<char>(l);
        if (probe.reducible_suffix(v)) continue;
        next.push_back(std::move(v));
        if (res.words.size() + next.size() > word_bound) {
          res.complete = false;
          res.words.insert(res.words.end(), next.begin(), next.end());
          return res;
        }
      }
    res.words.insert(res.words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return res;
}

// ---------------------------------------------------------------- Hopf structure

TensorPoly apply_coproduct(const Presentation& p, const GenTensorMap& delta, const Poly& x) {
  TensorPoly out(2);
  for (const auto& [w, c] : x.terms) {
    TensorPoly acc = TensorPoly::one(2);
    for (char l : w) {
      auto it = delta.find(l);
      if (it == delta.end()) throw PresentationError("no coproduct for generator " + p.name(l));
      acc = p.normal_form(acc * it->second);
    }
    out.add(acc, c);
  }
  return out;
}

Scalar apply_counit(const GenScalarMap& eps, const Poly& x) {
  Scalar out = 0;
  for (const auto& [w, c] : x.terms) {
    Scalar v = c;
    for (char l : w) {
      auto it = eps.find(l);
      if (it == eps.end()) throw PresentationError("no counit for a generator");
      v *= it->second;
      if (v.is_zero()) break;
    }
    out += v;
  }
  return out;
}

Poly apply_antipode(const Presentation& p, const GenPolyMap& s, const Poly& x) {
  Poly out;
  for (const auto& [w, c] : x.terms) {
    Poly acc(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto f = s.find(*it);
      if (f == s.end()) throw PresentationError("no antipode for generator " + p.name(*it));
      acc = p.normal_form(acc * f->second);
    }
    out.add(acc, c);
  }
  return out;
}

namespace {

// sum c * f(w1) g(w2) over the terms of a 2-tensor, in normal form.
template <class F, class G>
Poly contract(const Presentation& p, const TensorPoly& t, F f, G g) {
  Poly out;
  for (const auto& [ws, c] : t.terms) out.add(p.normal_form(f(ws[0]) * g(ws[1])), c);
  return out;
}

}  // namespace

CheckReport check_bialgebra_on_presentation(const Presentation& p, const GenTensorMap& delta,
                                            const GenScalarMap& eps) {
  CheckReport rep;
  for (std::size_t l = 0; l < p.num_letters(); ++l) {
    char ch = static_cast<char>(l);
    if (!delta.count(ch)) rep.failures.push_back("missing coproduct of " + p.name(ch));
    if (!eps.count(ch)) rep.failures.push_back("missing counit of " + p.name(ch));
  }
  if (!rep.ok()) return rep;

  for (const auto& r : p.rules()) {
    Poly rel = Poly::word(r.lhs) - r.rhs;
    TensorPoly d = apply_coproduct(p, delta, rel);
    if (!d.is_zero()) rep.failures.push_back("Delta does not respect " + p.str(r.lhs) + " -> " + p.str(r.rhs));
    if (!apply_counit(eps, rel).is_zero())
      rep.failures.push_back("eps does not respect " + p.str(r.lhs) + " -> " + p.str(r.rhs));
  }
  for (const auto& [l, dx] : delta) {
    Poly x = Poly::word(Word(1, l));
    TensorPoly left(3);
    TensorPoly right(3);
    for (const auto& [ws, c] : dx.terms) {
      left.add(outer(apply_coproduct(p, delta, Poly::word(ws[0])), TensorPoly::from_poly(Poly::word(ws[1]))), c);
      right.add(outer(TensorPoly::from_poly(Poly::word(ws[0])), apply_coproduct(p, delta, Poly::word(ws[1]))), c);
    }
    if (!(p.normal_form(left) == p.normal_form(right)))
      rep.failures.push_back("coassociativity fails on " + p.name(l));
    Poly cl;
    Poly cr;
    for (const auto& [ws, c] : dx.terms) {
      cl.add(Poly::word(ws[1]), c * apply_counit(eps, Poly::word(ws[0])));
      cr.add(Poly::word(ws[0]), c * apply_counit(eps, Poly::word(ws[1])));
    }
    if (!(p.normal_form(cl) == x) || !(p.normal_form(cr) == x))
      rep.failures.push_back("counit axiom fails on " + p.name(l));
  }
  return rep;
}

CheckReport check_bialgebra_on_presentation(const Presentation& p) {
  return check_bialgebra_on_presentation(p, p.coproducts(), p.counits());
}

namespace {

bool verify_antipode(const Presentation& p, const GenTensorMap& delta, const GenScalarMap& eps,
                     const GenPolyMap& s) {
  auto sw = [&](const Word& w) { return apply_antipode(p, s, Poly::word(w)); };
  auto id = [](const Word& w) { return Poly::word(w); };
  for (const auto& [l, dx] : delta) {
    Poly e(eps.at(l));
    if (!(contract(p, dx, sw, id) == e)) return false;
    if (!(contract(p, dx, id, sw) == e)) return false;
  }
  for (const auto& r : p.rules())
    if (!(apply_antipode(p, s, Poly::word(r.lhs)) == apply_antipode(p, s, r.rhs))) return false;
  return true;
}

std::vector<Word> group_words(const Presentation& p) {
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  const std::size_t m = p.num_module_letters();
  while (!level.empty() && out.size() < 4096) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (std::size_t l = m; l < p.num_letters(); ++l) {
        Word v = w + static_cast<char>(l);
        if (p.is_irreducible(v)) next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

bool known_letters(const Word& w, const GenPolyMap& s, char except) {
  return std::all_of(w.begin(), w.end(), [&](char c) { return c == except || s.count(c); });
}

}  // namespace

std::optional<GenPolyMap> find_antipode(const Presentation& p, const GenTensorMap& delta,
                                        const GenScalarMap& eps) {
  GenPolyMap s;
  std::vector<Word> cands;
  bool progress = true;
  while (progress && s.size() < p.num_letters()) {
    progress = false;
    for (std::size_t li = 0; li < p.num_letters(); ++li) {
      char x = static_cast<char>(li);
      if (s.count(x)) continue;
      auto dit = delta.find(x);
      auto eit = eps.find(x);
      if (dit == delta.end() || eit == eps.end()) return std::nullopt;
      const TensorPoly& dx = dit->second;
      const Word xw(1, x);
      auto contains = [x](const Word& w) { return std::count(w.begin(), w.end(), x); };

      // x (x) 1 + (terms whose left factor avoids x): solve directly.
      auto lead = dx.terms.find({xw, Word{}});
      bool direct = lead != dx.terms.end() && lead->second.is_one();
      bool ready = true;
      for (const auto& [ws, c] : dx.terms) {
        if (direct && ws == std::vector<Word>{xw, Word{}}) continue;
        if (direct && contains(ws[0])) direct = false;
        if (contains(ws[0]) > 1) ready = false;
        if (!known_letters(ws[0], s, x)) ready = false;
      }
      if (!ready) continue;
      if (direct) {
        Poly sx(eit->second);
        for (const auto& [ws, c] : dx.terms) {
          if (ws == std::vector<Word>{xw, Word{}}) continue;
          sx.add(p.normal_form(apply_antipode(p, s, Poly::word(ws[0])) * Poly::word(ws[1])), -c);
        }
        s[x] = p.normal_form(sx);
        progress = true;
        continue;
      }
      // Affine in S(x): solve over the span of irreducible group words.
      if (cands.empty()) cands = group_words(p);
      Poly constant;
      std::vector<Poly> columns(cands.size());
      for (const auto& [ws, c] : dx.terms) {
        if (!contains(ws[0])) {
          constant.add(p.normal_form(apply_antipode(p, s, Poly::word(ws[0])) * Poly::word(ws[1])), c);
          continue;
        }
        for (std::size_t k = 0; k < cands.size(); ++k) {
          GenPolyMap trial = s;
          trial[x] = Poly::word(cands[k]);
          columns[k].add(p.normal_form(apply_antipode(p, trial, Poly::word(ws[0])) * Poly::word(ws[1])), c);
        }
      }
      Poly target = Poly(eit->second) - constant;
      std::map<Word, Index> rows;
      for (const auto& col : columns)
        for (const auto& [w, c] : col.terms) rows.emplace(w, 0);
      for (const auto& [w, c] : target.terms) rows.emplace(w, 0);
      Index r = 0;
      for (auto& [w, idx] : rows) idx = r++;
      Mat a = Mat::Zero(r, static_cast<Index>(cands.size()));
      Vec b = Vec::Zero(r);
      for (std::size_t k = 0; k < cands.size(); ++k)
        for (const auto& [w, c] : columns[k].terms) a(rows.at(w), static_cast<Index>(k)) = c;
      for (const auto& [w, c] : target.terms) b(rows.at(w)) = c;
      auto sol = solve(a, b);
      if (!sol) return std::nullopt;
      Poly sx;
      for (std::size_t k = 0; k < cands.size(); ++k) sx.add(cands[k], (*sol)(static_cast<Index>(k)));
      s[x] = p.normal_form(sx);
      progress = true;
    }
  }
  if (s.size() < p.num_letters()) return std::nullopt;
  if (!verify_antipode(p, delta, eps, s)) return std::nullopt;
  return s;
}

std::optional<GenPolyMap> find_antipode(const Presentation& p) {
  return find_antipode(p, p.coproducts(), p.counits());
}

CheckReport check_presented_morphism(const Presentation& from, const Presentation& to,
                                     const std::map<std::string, Poly>& images) {
  CheckReport rep;
  std::map<char, Poly> phi;
  for (std::size_t l = 0; l < from.num_letters(); ++l) {
    char ch = static_cast<char>(l);
    const std::string& n = from.name(ch);
    if (auto it = images.find(n); it != images.end()) {
      phi[ch] = to.normal_form(it->second);
    } else if (auto t = to.letter(n)) {
      phi[ch] = Poly::word(Word(1, *t));
    } else {
      rep.failures.push_back("no image for generator " + n);
    }
  }
  for (const auto& [n, img] : images)
    if (!from.letter(n)) rep.failures.push_back("image given for unknown generator " + n);
  if (!rep.ok()) return rep;

  auto map_word = [&](const Word& w) {
    Poly acc(1);
    for (char ch : w) acc = to.normal_form(acc * phi.at(ch));
    return acc;
  };
  auto map_poly = [&](const Poly& x) {
    Poly out;
    for (const auto& [w, c] : x.terms) out.add(map_word(w), c);
    return out;
  };

  for (const auto& r : from.rules())
    if (!map_poly(Poly::word(r.lhs) - r.rhs).is_zero())
      rep.failures.push_back("relation " + from.str(r.lhs) + " -> " + from.str(r.rhs) + " is not preserved");

  for (const auto& [l, dx] : from.coproducts()) {
    TensorPoly lhs = apply_coproduct(to, to.coproducts(), phi.at(l));
    TensorPoly rhs(2);
    for (const auto& [ws, c] : dx.terms)
      rhs.add(outer(TensorPoly::from_poly(map_word(ws[0])), TensorPoly::from_poly(map_word(ws[1]))), c);
    if (!(to.normal_form(lhs) == to.normal_form(rhs)))
      rep.failures.push_back("Delta is not preserved on " + from.name(l));
  }
  for (const auto& [l, e] : from.counits())
    if (apply_counit(to.counits(), phi.at(l)) != e) rep.failures.push_back("eps is not preserved on " + from.name(l));
  return rep;
}

HopfData hopf_data_from_presentation(const Presentation& p, const std::vector<Word>& basis) {
  const std::size_t n = basis.size();
  std::unordered_map<Word, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);
  auto coords = [&](const Poly& x) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (const auto& [w, c] : x.terms) {
      auto it = index.find(w);
      if (it == index.end()) throw PresentationError("normal form " + p.str(w) + " is not in the given basis");
      out.emplace_back(it->second, c);
    }
    return out;
  };

  std::vector<Scalar> mul(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : coords(p.normal_form(basis[i] + basis[j]))) mul[(i * n + j) * n + k] = c;

  Vec unit = Vec::Zero(static_cast<Index>(n));
  for (const auto& [k, c] : coords(Poly(1))) unit(static_cast<Index>(k)) = c;

  std::vector<Scalar> comul(n * n * n, Scalar(0));
  Vec counit = Vec::Zero(static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    TensorPoly d = apply_coproduct(p, p.coproducts(), Poly::word(basis[i]));
    for (const auto& [ws, c] : d.terms) {
      auto j = index.find(ws[0]);
      auto k = index.find(ws[1]);
      if (j == index.end() || k == index.end()) throw PresentationError("coproduct leaves the given basis");
      comul[(i * n + j->second) * n + k->second] += c;
    }
    counit(static_cast<Index>(i)) = apply_counit(p.counits(), Poly::word(basis[i]));
  }

  GenPolyMap s = p.antipodes();
  if (s.size() < p.num_letters()) {
    auto found = find_antipode(p);
    if (!found) throw PresentationError("no antipode could be found");
    s = *found;
  }
  Mat antipode = Mat::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, c] : coords(apply_antipode(p, s, Poly::word(basis[j]))))
      antipode(static_cast<Index>(k), static_cast<Index>(j)) = c;

  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> spelling;
  for (const Word& w : basis) {
    names.push_back(p.str(w));
    std::vector<std::size_t> sp;
    for (char ch : w) sp.push_back(static_cast<unsigned char>(ch));
    spelling.push_back(std::move(sp));
  }
  HopfData h(std::move(names), std::move(mul), std::move(unit), std::move(comul), std::move(counit),
             std::move(antipode));
  h.set_spelling(p.names(), std::move(spelling));
  return h;
}

}  // namespace hopflift
