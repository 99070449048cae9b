#include "gspline/ring.hpp"

#include "gspline/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <ostream>
#include <utility>

namespace gspline {

namespace mp = boost::multiprecision;

namespace {

// ---- prime field scalars -------------------------------------------------

Int imod(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  return r;
}

Int inv_int_mod(const Int& a, const Int& p) {
  // extended Euclid; p prime, a not divisible by p
  Int r0 = imod(a, p), r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw DomainError("element not invertible in GF(p)");
  return imod(s0, p);
}

// Deterministic Miller-Rabin; this witness set is exact below 3.3e24 and
// leaves no realistic doubt above it.
bool is_prime(const Int& n) {
  static const int witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (int w : witnesses) {
    if (n % w == 0) return n == w;
  }
  Int d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int w : witnesses) {
    Int x = mp::powm(Int(w), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r && composite; ++i) {
      x = x * x % n;
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// Maps a rational into the field of coefficients. Over Q this is the
// identity; over GF(p) the denominator must be invertible mod p.
Rat reduce_coeff(const RingSpec& ring, const Rat& c) {
  if (ring.kind() != RingKind::PrimeFieldPoly) return c;
  const Int& p = ring.prime();
  Int den = imod(mp::denominator(c), p);
  if (den == 0)
    throw InputError("coefficient not reducible into GF(" + p.str() + ")");
  return Rat(imod(mp::numerator(c) * inv_int_mod(den, p), p));
}

Rat coeff_inv(const RingSpec& ring, const Rat& c) {
  if (ring.kind() == RingKind::PrimeFieldPoly)
    return Rat(inv_int_mod(mp::numerator(c), ring.prime()));
  return Rat(1) / c;
}

using Coeffs = std::vector<Rat>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs poly_add(const RingSpec& ring, const Coeffs& a, const Coeffs& b, int sign) {
  Coeffs out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rat v = (i < a.size() ? a[i] : Rat(0));
    if (i < b.size()) v += sign < 0 ? -b[i] : b[i];
    out[i] = reduce_coeff(ring, v);
  }
  trim(out);
  return out;
}

Coeffs poly_mul(const RingSpec& ring, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (Rat& v : out) v = reduce_coeff(ring, v);
  trim(out);
  return out;
}

// Long division by a nonzero divisor; remainder degree < divisor degree.
std::pair<Coeffs, Coeffs> poly_divmod(const RingSpec& ring, Coeffs a, const Coeffs& b) {
  assert(!b.empty());
  if (a.size() < b.size()) return {{}, std::move(a)};
  Coeffs q(a.size() - b.size() + 1, Rat(0));
  Rat lead_inv = coeff_inv(ring, b.back());
  for (std::size_t d = q.size(); d-- > 0;) {
    Rat c = reduce_coeff(ring, a[d + b.size() - 1] * lead_inv);
    if (c != 0) {
      q[d] = c;
      for (std::size_t j = 0; j < b.size(); ++j)
        a[d + j] = reduce_coeff(ring, a[d + j] - c * b[j]);
    }
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

void require_same_ring(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring())
    throw MixedRingError("operands belong to different rings (" + a.ring().to_string() +
                         " vs " + b.ring().to_string() + ")");
}

// Euclidean division step shared by egcd/divides/exact_div. Any remainder
// smaller than the divisor (in the Euclidean sense) will do here; canonical
// residues are produced separately by mod_canonical.
std::pair<RingElem, RingElem> divmod_elem(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.ring().kind() == RingKind::Integers) {
    Int q = a.int_value() / b.int_value();  // truncated
    Int r = a.int_value() - q * b.int_value();
    return {RingElem::integer(std::move(q)), RingElem::integer(std::move(r))};
  }
  auto [q, r] = poly_divmod(a.ring(), a.coefficients(), b.coefficients());
  return {RingElem::poly(a.ring(), std::move(q)), RingElem::poly(a.ring(), std::move(r))};
}

// a = unit_of(a) * normalize(a)
RingElem unit_of(const RingElem& a) {
  if (a.is_zero()) return RingElem::one(a.ring());
  if (a.ring().kind() == RingKind::Integers)
    return RingElem::constant(a.ring(), a.int_value() < 0 ? -1 : 1);
  return RingElem::poly(a.ring(), {a.coefficients().back()});
}

}  // namespace

// ---- RingSpec --------------------------------------------------------------

RingSpec RingSpec::rational_poly() {
  RingSpec r;
  r.kind_ = RingKind::RationalPoly;
  return r;
}

RingSpec RingSpec::prime_field_poly(Int p) {
  if (!is_prime(p))
    throw SchemaError("GF(p)[x] needs a prime p, got " + p.str());
  RingSpec r;
  r.kind_ = RingKind::PrimeFieldPoly;
  r.prime_ = std::move(p);
  return r;
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q[x]") return rational_poly();
  if (text.starts_with("GF(") && text.ends_with(")[x]")) {
    std::string_view digits = text.substr(3, text.size() - 7);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos)
      return prime_field_poly(Int(std::string(digits)));
  }
  throw SchemaError("unknown ring \"" + std::string(text) +
                    "\" (expected \"Z\", \"Q[x]\" or \"GF(p)[x]\")");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::RationalPoly: return "Q[x]";
    case RingKind::PrimeFieldPoly: return "GF(" + prime_.str() + ")[x]";
  }
  return "?";
}

// ---- RingElem construction and access ---------------------------------------

RingElem RingElem::zero(const RingSpec& ring) { return constant(ring, 0); }

RingElem RingElem::one(const RingSpec& ring) { return constant(ring, 1); }

RingElem RingElem::integer(Int value) {
  RingElem e;
  e.payload_ = std::move(value);
  return e;
}

RingElem RingElem::constant(const RingSpec& ring, long long value) {
  if (ring.kind() == RingKind::Integers) return integer(Int(value));
  return poly(ring, {Rat(value)});
}

RingElem RingElem::poly(const RingSpec& ring, std::vector<Rat> coefficients) {
  if (!ring.is_poly())
    throw MixedRingError("polynomial payload requires a polynomial ring");
  for (Rat& c : coefficients) c = reduce_coeff(ring, c);
  trim(coefficients);
  RingElem e;
  e.ring_ = ring;
  e.payload_ = std::move(coefficients);
  return e;
}

const Int& RingElem::int_value() const {
  assert(ring_.kind() == RingKind::Integers);
  return std::get<Int>(payload_);
}

const std::vector<Rat>& RingElem::coefficients() const {
  assert(ring_.is_poly());
  return std::get<std::vector<Rat>>(payload_);
}

int RingElem::degree() const {
  return static_cast<int>(coefficients().size()) - 1;
}

bool RingElem::is_zero() const {
  if (ring_.kind() == RingKind::Integers) return int_value() == 0;
  return coefficients().empty();
}

bool RingElem::is_one() const {
  if (ring_.kind() == RingKind::Integers) return int_value() == 1;
  return coefficients().size() == 1 && coefficients()[0] == 1;
}

bool RingElem::is_unit() const {
  if (ring_.kind() == RingKind::Integers)
    return int_value() == 1 || int_value() == -1;
  return coefficients().size() == 1;  // nonzero constants over a field
}

RingElem RingElem::operator-() const {
  if (ring_.kind() == RingKind::Integers) return integer(-int_value());
  Coeffs out = coefficients();
  for (Rat& c : out) c = reduce_coeff(ring_, -c);
  return poly(ring_, std::move(out));
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.ring().kind() == RingKind::Integers)
    return RingElem::integer(a.int_value() + b.int_value());
  return RingElem::poly(a.ring(), poly_add(a.ring(), a.coefficients(), b.coefficients(), +1));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.ring().kind() == RingKind::Integers)
    return RingElem::integer(a.int_value() - b.int_value());
  return RingElem::poly(a.ring(), poly_add(a.ring(), a.coefficients(), b.coefficients(), -1));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.ring().kind() == RingKind::Integers)
    return RingElem::integer(a.int_value() * b.int_value());
  return RingElem::poly(a.ring(), poly_mul(a.ring(), a.coefficients(), b.coefficients()));
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) return false;
  if (a.ring().kind() == RingKind::Integers) return a.int_value() == b.int_value();
  return a.coefficients() == b.coefficients();
}

// ---- divisibility lattice ----------------------------------------------------

RingElem normalize(const RingElem& a) {
  if (a.is_zero()) return a;
  if (a.ring().kind() == RingKind::Integers)
    return RingElem::integer(mp::abs(a.int_value()));
  Coeffs out = a.coefficients();
  Rat inv = coeff_inv(a.ring(), out.back());
  for (Rat& c : out) c = reduce_coeff(a.ring(), c * inv);
  return RingElem::poly(a.ring(), std::move(out));
}

RingElem gcd(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.ring().kind() == RingKind::Integers)
    return RingElem::integer(mp::gcd(a.int_value(), b.int_value()));
  RingElem r0 = a, r1 = b;
  while (!r1.is_zero()) {
    RingElem r2 = divmod_elem(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return normalize(r0);
}

RingElem gcd_all(const RingSpec& ring, std::span<const RingElem> values) {
  RingElem g = RingElem::zero(ring);
  for (const RingElem& v : values) g = gcd(g, v);
  return g;
}

RingElem lcm(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return RingElem::zero(a.ring());
  return normalize(exact_div(a * b, gcd(a, b)));
}

RingElem lcm_all(const RingSpec& ring, std::span<const RingElem> values) {
  RingElem m = RingElem::one(ring);
  for (const RingElem& v : values) m = lcm(m, v);
  return m;
}

Egcd egcd(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  RingElem r0 = a, s0 = RingElem::one(a.ring()), t0 = RingElem::zero(a.ring());
  RingElem r1 = b, s1 = t0, t1 = s0;
  while (!r1.is_zero()) {
    auto [q, r2] = divmod_elem(r0, r1);
    RingElem s2 = s0 - q * s1;
    RingElem t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  RingElem u = unit_of(r0);
  return {exact_div(r0, u), exact_div(s0, u), exact_div(t0, u)};
}

bool divides(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.is_zero()) return b.is_zero();
  return divmod_elem(b, a).second.is_zero();
}

RingElem exact_div(const RingElem& b, const RingElem& a) {
  if (a.is_zero()) {
    if (b.is_zero())
      throw InexactDivisionError("0/0 is indeterminate");
    throw InexactDivisionError("division of " + print_elem(b) + " by zero");
  }
  auto [q, r] = divmod_elem(b, a);
  if (!r.is_zero())
    throw InexactDivisionError(print_elem(a) + " does not divide " + print_elem(b));
  return q;
}

RingElem mod_canonical(const RingElem& b, const RingElem& m) {
  if (m.is_zero()) return b;
  if (b.ring().kind() == RingKind::Integers) {
    require_same_ring(b, m);
    Int mm = mp::abs(m.int_value());
    Int r = b.int_value() % mm;
    if (r < 0) r += mm;
    return RingElem::integer(std::move(r));
  }
  return divmod_elem(b, m).second;  // field coefficients: remainder is unique
}

RingElem inv_mod(const RingElem& a, const RingElem& m) {
  if (m.is_zero()) {
    // x = a^{-1} exactly: only units qualify
    if (!a.is_unit())
      throw DomainError("inverse modulo 0 requires a unit, got " + print_elem(a));
    if (a.ring().kind() == RingKind::Integers) return a;  // 1 and -1 are self-inverse
    return RingElem::poly(a.ring(), {coeff_inv(a.ring(), a.coefficients()[0])});
  }
  if (m.is_unit()) return RingElem::zero(a.ring());
  Egcd e = egcd(a, m);
  if (!e.g.is_one())
    throw DomainError(print_elem(a) + " is not invertible modulo " + print_elem(m));
  return mod_canonical(e.s, m);
}

// ---- congruence systems -----------------------------------------------------

void CongruenceSystem::add(RingElem residue, RingElem modulus) {
  if (residue.ring() != ring_ || modulus.ring() != ring_)
    throw MixedRingError("congruence condition ring does not match the system");
  conditions_.push_back({std::move(residue), std::move(modulus)});
}

RingElem crt_solve(const CongruenceSystem& system) {
  auto conds = system.conditions();
  // Pairwise compatibility up front, so failures can name an offending pair.
  // Over a PID pairwise compatibility already implies global solvability.
  for (std::size_t i = 0; i < conds.size(); ++i) {
    for (std::size_t j = i + 1; j < conds.size(); ++j) {
      RingElem g = gcd(conds[i].modulus, conds[j].modulus);
      if (!divides(g, conds[i].residue - conds[j].residue))
        throw IncompatibleSystemError(
            "congruences " + std::to_string(i) + " and " + std::to_string(j) +
                " are incompatible: residues differ by " +
                print_elem(conds[i].residue - conds[j].residue) + " modulo gcd " +
                print_elem(g),
            i, j);
    }
  }

  RingElem x = RingElem::zero(system.ring());
  RingElem span = RingElem::one(system.ring());  // zero span == value pinned exactly
  bool pinned = false;
  for (const auto& cond : conds) {
    RingElem r = cond.residue;
    const RingElem& m = cond.modulus;
    if (m.is_unit()) continue;  // no constraint
    if (m.is_zero()) {
      if (!divides(span, r - x))
        throw std::logic_error("crt fold lost compatibility");
      x = std::move(r);
      pinned = true;
      span = RingElem::zero(system.ring());
      continue;
    }
    if (pinned) {
      if (!divides(m, x - r))
        throw std::logic_error("crt fold lost compatibility");
      continue;
    }
    r = mod_canonical(r, m);
    Egcd e = egcd(span, m);
    RingElem diff = r - x;
    if (!divides(e.g, diff))
      throw std::logic_error("crt fold lost compatibility");
    RingElem next_span = lcm(span, m);
    x = mod_canonical(x + span * e.s * exact_div(diff, e.g), next_span);
    span = std::move(next_span);
  }
  return x;
}

// ---- parsing and printing -----------------------------------------------------

namespace {

class ElemParser {
 public:
  ElemParser(const RingSpec& ring, std::string_view text) : ring_(ring), text_(text) {}

  RingElem run() {
    skip_ws();
    RingElem v = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool take(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Int parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  RingElem parse_number() {
    std::size_t start = pos_;
    Int num = parse_digits();
    if (take('/')) {
      Int den = parse_digits();
      if (den == 0) throw ParseError("zero denominator", start);
      if (ring_.kind() == RingKind::PrimeFieldPoly && den % ring_.prime() == 0)
        throw ParseError("coefficient not reducible into " + ring_.to_string(), start);
      return RingElem::poly(ring_, {Rat(num, den)});
    }
    return RingElem::poly(ring_, {Rat(num)});
  }

  RingElem parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingElem v = parse_expr();
      if (!take(')')) fail("expected ')'");
      return v;
    }
    if (c == 'x') {
      ++pos_;
      return RingElem::poly(ring_, {Rat(0), Rat(1)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    fail("expected a number, 'x' or '('");
  }

  RingElem parse_factor() {
    RingElem base = parse_base();
    if (take('^')) {
      Int e = parse_digits();
      if (e > 4096) fail("exponent too large");
      RingElem out = RingElem::one(ring_);
      for (Int i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  RingElem parse_term() {
    RingElem v = parse_factor();
    while (take('*')) v = v * parse_factor();
    return v;
  }

  RingElem parse_expr() {
    bool neg = take('-');
    RingElem v = parse_term();
    if (neg) v = -v;
    for (;;) {
      if (take('+'))
        v = v + parse_term();
      else if (take('-'))
        v = v - parse_term();
      else
        return v;
    }
  }

  const RingSpec& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string rat_str(const Rat& r) {
  std::string s = mp::numerator(r).str();
  if (mp::denominator(r) != 1) s += "/" + mp::denominator(r).str();
  return s;
}

}  // namespace

RingElem parse_elem(const RingSpec& ring, std::string_view text) {
  if (ring.kind() == RingKind::Integers) {
    std::size_t pos = 0, end = text.size();
    while (pos < end && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    while (end > pos && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    std::size_t start = pos;
    if (pos < end && (text[pos] == '+' || text[pos] == '-')) ++pos;
    if (pos == end) throw ParseError("expected an integer literal", start);
    for (std::size_t i = pos; i < end; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected an integer literal", i);
    if (text[start] == '+') ++start;  // cpp_int rejects an explicit plus
    return RingElem::integer(Int(std::string(text.substr(start, end - start))));
  }
  return ElemParser(ring, text).run();
}

std::string print_elem(const RingElem& e) {
  if (e.ring().kind() == RingKind::Integers) return e.int_value().str();
  const auto& c = e.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    const Rat& v = c[d];
    if (v == 0) continue;
    bool negative = v < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    Rat mag = negative ? Rat(-v) : v;
    if (d == 0) {
      out += rat_str(mag);
    } else {
      if (mag != 1) out += rat_str(mag) + "*";
      out += d == 1 ? "x" : "x^" + std::to_string(d);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RingElem& e) {
  return os << print_elem(e);
}

}  // namespace gspline
