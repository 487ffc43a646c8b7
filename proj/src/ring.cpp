#include "fproot/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "fproot/bigint.hpp"
#include "fproot/kernels.hpp"

namespace fproot {

// ---------------------------------------------------------------------------
// ring context

std::size_t RingContext::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return static_cast<std::size_t>(-1);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  auto mul = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  auto pw = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mul(r, a, m);
      a = mul(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pw(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Ring make_ring(std::uint64_t p, std::vector<std::string> vars, Order order) {
  if (!is_prime_u64(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
  if (vars.empty()) throw DomainError("ring needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw DomainError("empty variable name");
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw DomainError("duplicate variable name: " + vars[i]);
  }
  auto ctx = std::make_shared<RingContext>();
  ctx->p = p;
  ctx->vars = std::move(vars);
  ctx->order = order;
  return ctx;
}

Ring parse_ring(std::string_view text) {
  std::uint64_t p = 0;
  bool have_p = false;
  std::vector<std::string> vars;
  Order order = Order::grevlex;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in ring string", pos);
    std::string_view key = field.substr(0, eq);
    std::string_view value = field.substr(eq + 1);
    if (key == "p") {
      p = static_cast<std::uint64_t>(BigInt::from_decimal(value).to_int64());
      have_p = true;
    } else if (key == "vars") {
      std::size_t vpos = 0;
      while (vpos <= value.size()) {
        auto comma = value.find(',', vpos);
        if (comma == std::string_view::npos) comma = value.size();
        std::string name(value.substr(vpos, comma - vpos));
        // trim surrounding blanks
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        if (name.empty()) throw ParseError("empty variable name in ring string", pos);
        vars.push_back(std::move(name));
        if (comma == value.size()) break;
        vpos = comma + 1;
      }
    } else if (key == "order") {
      if (value == "grevlex")
        order = Order::grevlex;
      else if (value == "lex")
        order = Order::lex;
      else
        throw ParseError("unknown order (expected grevlex or lex)", pos);
    } else {
      throw ParseError("unknown ring field: " + std::string(key), pos);
    }
    pos = end + 1;
  }
  if (!have_p) throw ParseError("ring string missing p=", 0);
  if (vars.empty()) throw ParseError("ring string missing vars=", 0);
  return make_ring(p, std::move(vars), order);
}

std::string ring_to_string(const RingContext& ctx) {
  std::ostringstream os;
  os << "p=" << ctx.p << ";vars=";
  for (std::size_t i = 0; i < ctx.vars.size(); ++i) {
    if (i) os << ",";
    os << ctx.vars[i];
  }
  os << ";order=" << (ctx.order == Order::lex ? "lex" : "grevlex");
  return os.str();
}

bool same_ring(const RingContext& a, const RingContext& b) {
  return a.p == b.p && a.order == b.order && a.vars == b.vars;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a || !b || (a.get() != b.get() && !same_ring(*a, *b)))
    throw ContextMismatch("operands live in different ring contexts");
}

// ---------------------------------------------------------------------------
// scalars

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DomainError("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

// ---------------------------------------------------------------------------
// monomials

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](std::int64_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exps) {
    h ^= static_cast<std::size_t>(e);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {
std::int64_t checked_exp_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = a + b;
  if (r > kExponentCap) throw ExponentOverflow("monomial exponent exceeds cap");
  return r;
}
}  // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = checked_exp_add(out.exps[i], b.exps[i]);
  return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] -= b.exps[i];
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = std::max(out.exps[i], b.exps[i]);
  return out;
}

Monomial mono_scale(const Monomial& m, std::int64_t q) {
  Monomial out = m;
  for (auto& e : out.exps) {
    if (e != 0 && e > kExponentCap / q) throw ExponentOverflow("monomial exponent exceeds cap");
    e *= q;
  }
  return out;
}

Monomial mono_floor_div(const Monomial& m, std::int64_t q) {
  Monomial out = m;
  for (auto& e : out.exps) e /= q;
  return out;
}

Monomial mono_mod(const Monomial& m, std::int64_t q) {
  Monomial out = m;
  for (auto& e : out.exps) e %= q;
  return out;
}

namespace {
int compare_span(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                 std::size_t from, bool lex) {
  if (lex) {
    for (std::size_t i = from; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  std::int64_t da = 0, db = 0;
  for (std::size_t i = from; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > from;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // rightmost difference: smaller wins
  return 0;
}
}  // namespace

int mono_compare(const Monomial& a, const Monomial& b, Order order) {
  switch (order) {
    case Order::grevlex:
      return compare_span(a.exps, b.exps, 0, false);
    case Order::lex:
      return compare_span(a.exps, b.exps, 0, true);
    case Order::elim1_grevlex:
    case Order::elim1_lex:
      if (a.exps[0] != b.exps[0]) return a.exps[0] < b.exps[0] ? -1 : 1;
      return compare_span(a.exps, b.exps, 1, order == Order::elim1_lex);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// polynomials

Polynomial Polynomial::zero(Ring ring) {
  Polynomial f;
  f.ring_ = std::move(ring);
  return f;
}

Polynomial Polynomial::constant(Ring ring, std::uint64_t c) {
  c %= ring->p;
  Polynomial f;
  std::size_t n = ring->arity();
  f.ring_ = std::move(ring);
  if (c != 0) f.terms_.push_back(Term{Monomial::one(n), c});
  return f;
}

Polynomial Polynomial::variable(Ring ring, std::size_t var_index) {
  Monomial m = Monomial::one(ring->arity());
  m.exps.at(var_index) = 1;
  return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::term(Ring ring, Monomial m, std::uint64_t c) {
  std::vector<Term> ts;
  ts.push_back(Term{std::move(m), c});
  return from_terms(std::move(ring), std::move(ts));
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const std::uint64_t p = ring->p;
  const std::size_t arity = ring->arity();
  const Order order = ring->order;
  for (auto& t : terms) {
    if (t.mono.exps.size() != arity) throw ContextMismatch("monomial arity mismatch");
    for (auto e : t.mono.exps) {
      if (e < 0) throw DomainError("negative exponent");
      if (e > kExponentCap) throw ExponentOverflow("monomial exponent exceeds cap");
    }
    t.coeff %= p;
  }
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return mono_compare(a.mono, b.mono, order) > 0;
  });
  std::vector<Term> folded;
  folded.reserve(terms.size());
  for (auto& t : terms) {
    if (!folded.empty() && folded.back().mono == t.mono) {
      folded.back().coeff = (folded.back().coeff + t.coeff) % p;
    } else {
      folded.push_back(std::move(t));
    }
  }
  std::erase_if(folded, [](const Term& t) { return t.coeff == 0; });
  Polynomial f;
  f.ring_ = std::move(ring);
  f.terms_ = std::move(folded);
  return f;
}

bool Polynomial::in_maximal_ideal() const {
  if (is_zero()) return true;
  return !terms_.back().mono.is_one();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_[0];
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  const auto& ctx = *a.ring_;
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = mono_compare(a.terms_[i].mono, b.terms_[j].mono, ctx.order);
    if (c > 0) {
      out.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      std::uint64_t s = (a.terms_[i].coeff + b.terms_[j].coeff) % ctx.p;
      if (s != 0) out.push_back(Term{a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  Polynomial f;
  f.ring_ = a.ring_;
  f.terms_ = std::move(out);
  return f;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b.scaled(b.ring_ ? b.ring_->p - 1 : 1);
}

Polynomial Polynomial::scaled(std::uint64_t c) const {
  if (!ring_) return *this;
  const std::uint64_t p = ring_->p;
  c %= p;
  Polynomial f;
  f.ring_ = ring_;
  if (c == 0) return f;
  f.terms_ = terms_;
  for (auto& t : f.terms_) t.coeff = mulmod(t.coeff, c, p);
  return f;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint64_t c) const {
  const std::uint64_t p = ring_->p;
  c %= p;
  Polynomial f;
  f.ring_ = ring_;
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    f.terms_.push_back(Term{mono_mul(t.mono, m), mulmod(t.coeff, c, p)});
  return f;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(terms_[0].coeff, ring_->p));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  Polynomial f;
  f.ring_ = a.ring_;
  if (a.is_zero() || b.is_zero()) return f;
  f.terms_ = kernels::multiply(a.terms_, b.terms_, a.ring_->p, a.ring_->order);
  return f;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ && b.ring_) require_same_ring(a.ring_, b.ring_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

int poly_compare(const Polynomial& a, const Polynomial& b) {
  const Order order = a.ring() ? a.ring()->order : Order::grevlex;
  std::size_t n = std::min(a.terms().size(), b.terms().size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = mono_compare(a.terms()[i].mono, b.terms()[i].mono, order);
    if (c != 0) return c;
    if (a.terms()[i].coeff != b.terms()[i].coeff)
      return a.terms()[i].coeff < b.terms()[i].coeff ? -1 : 1;
  }
  if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// parsing and printing

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const Ring& ring;

  explicit Parser(std::string_view t, const Ring& r) : text(t), ring(r) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::pair<std::uint64_t, std::int64_t> read_integer() {
    // returns (value mod p, value clamped for exponent use or -1 if too big)
    skip_ws();
    std::size_t start = pos;
    std::uint64_t modval = 0;
    std::int64_t raw = 0;
    bool raw_ok = true;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int d = text[pos] - '0';
      modval = (modval * 10 + static_cast<std::uint64_t>(d)) % ring->p;
      if (raw_ok) {
        if (raw > (kExponentCap - d) / 10)
          raw_ok = false;
        else
          raw = raw * 10 + d;
      }
      ++pos;
    }
    if (pos == start) throw ParseError("expected an integer", pos);
    return {modval, raw_ok ? raw : -1};
  }

  Polynomial parse_expression() {
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial acc = parse_product();
    if (negate) acc = acc.scaled(ring->p - 1);
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + parse_product();
      } else if (c == '-') {
        ++pos;
        acc = acc - parse_product();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_product() {
    Polynomial acc = parse_power();
    while (eat('*')) acc = acc * parse_power();
    return acc;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos;
      auto [modval, raw] = read_integer();
      (void)modval;
      if (raw < 0) throw ExponentOverflow("exponent exceeds cap (at position " + std::to_string(at) + ")");
      return poly_pow(base, raw);
    }
    return base;
  }

  Polynomial parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial inner = parse_expression();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto [modval, raw] = read_integer();
      (void)raw;
      return Polynomial::constant(ring, modval);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string_view name = text.substr(start, pos - start);
      std::size_t idx = ring->var_index(name);
      if (idx == static_cast<std::size_t>(-1))
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring, idx);
    }
    throw ParseError("unexpected character", pos);
  }
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) {
  Parser parser(text, ring);
  Polynomial f = parser.parse_expression();
  parser.skip_ws();
  if (parser.pos != text.size()) throw ParseError("trailing input after polynomial", parser.pos);
  return f;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const auto& vars = ring_->vars;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << "+";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      printed = true;
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::int64_t e = t.mono.exps[i];
      if (e == 0) continue;
      if (printed) os << "*";
      os << vars[i];
      if (e != 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// powers and Frobenius

Polynomial frobenius_scale(const Polynomial& f, std::int64_t q) {
  if (q == 1) return f;
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.mono = mono_scale(t.mono, q);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

namespace {
Polynomial small_pow(const Polynomial& f, std::int64_t n) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial sq = f;
  while (n) {
    if (n & 1) result = result * sq;
    n >>= 1;
    if (n) sq = sq * sq;
  }
  return result;
}
}  // namespace

Polynomial poly_pow(const Polynomial& f, std::int64_t n) {
  if (n < 0) throw DomainError("negative power");
  if (n == 0) return Polynomial::constant(f.ring(), 1);
  if (f.is_zero()) return f;
  if (f.is_monomial()) {
    const Term& t = f.terms()[0];
    return Polynomial::term(f.ring(), mono_scale(t.mono, n),
                            powmod(t.coeff, static_cast<std::uint64_t>(n), f.ring()->p));
  }
  const auto p = static_cast<std::int64_t>(f.ring()->p);
  Polynomial result = Polynomial::constant(f.ring(), 1);
  std::int64_t qshift = 1;
  std::int64_t rest = n;
  while (rest) {
    std::int64_t digit = rest % p;
    if (digit) result = result * frobenius_scale(small_pow(f, digit), qshift);
    rest /= p;
    if (rest) qshift *= p;  // qshift <= n, no overflow
  }
  return result;
}

FrobeniusDecomposition frobenius_expand(const Polynomial& f, std::int64_t q) {
  require_p_power(q, *f.ring());
  FrobeniusDecomposition dec;
  dec.q = q;
  const Order order = f.ring()->order;
  auto cmp = [order](const Monomial& a, const Monomial& b) { return mono_compare(a, b, order) < 0; };
  std::map<Monomial, std::vector<Term>, decltype(cmp)> groups(cmp);
  for (const auto& t : f.terms()) {
    Monomial alpha = mono_mod(t.mono, q);
    Monomial beta = mono_floor_div(t.mono, q);
    groups[std::move(alpha)].push_back(Term{std::move(beta), t.coeff});
  }
  for (auto& [alpha, terms] : groups) {
    // distinct source monomials with equal alpha have distinct beta, so no
    // cancellation: every part is nonzero
    dec.parts.emplace_back(alpha, Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  return dec;
}

Polynomial reassemble(const FrobeniusDecomposition& dec, const Ring& ring) {
  Polynomial acc = Polynomial::zero(ring);
  for (const auto& [alpha, part] : dec.parts)
    acc = acc + frobenius_scale(part, dec.q).times_term(alpha, 1);
  return acc;
}

// ---------------------------------------------------------------------------
// p-power utilities

bool is_power_of(std::int64_t q, std::uint64_t p, std::int64_t* e_out) {
  if (q < 1) return false;
  std::int64_t e = 0;
  std::uint64_t v = static_cast<std::uint64_t>(q);
  while (v > 1) {
    if (v % p != 0) return false;
    v /= p;
    ++e;
  }
  if (e_out) *e_out = e;
  return true;
}

void require_p_power(std::int64_t q, const RingContext& ctx) {
  if (q > q_cap())
    throw CapExceeded("q=" + std::to_string(q) + " exceeds the configured cap " +
                      std::to_string(q_cap()));
  if (!is_power_of(q, ctx.p))
    throw BadPower("q=" + std::to_string(q) + " is not a power of p=" + std::to_string(ctx.p));
}

std::int64_t checked_pow_i64(std::int64_t base, std::int64_t exp, std::int64_t limit) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > limit / base) throw ExponentOverflow("integer power exceeds limit");
    r *= base;
  }
  return r;
}

std::int64_t q_cap() {
  static const std::int64_t cap = [] {
    if (const char* env = std::getenv("FPROOT_QCAP")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v >= 2) return static_cast<std::int64_t>(v);
    }
    return std::int64_t{1} << 20;
  }();
  return cap;
}

}  // namespace fproot
