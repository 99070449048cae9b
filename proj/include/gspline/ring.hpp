#ifndef GSPLINE_RING_HPP
#define GSPLINE_RING_HPP

// Exact arithmetic in the three supported coefficient rings:
//
//   Z         arbitrary-precision integers
//   Q[x]      univariate polynomials with rational coefficients
//   GF(p)[x]  univariate polynomials over the prime field, p a prime
//
// All three are principal ideal domains with a Euclidean division, which is
// what every algorithm downstream relies on: gcd/lcm, extended gcd with a
// Bezout identity, and simultaneous-congruence solving where a modulus may be
// zero (meaning exact equality) or a unit (meaning no constraint at all).
//
// Canonical forms used throughout:
//   - integers: gcd/lcm/normalize results are non-negative,
//   - polynomials: gcd/lcm/normalize results are monic; GF(p) coefficients
//     are stored reduced into 0..p-1; rationals are kept in lowest terms,
//   - residues: the least non-negative value, resp. the remainder of degree
//     strictly below the modulus.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gspline {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, RationalPoly, PrimeFieldPoly };

class RingSpec {
 public:
  RingSpec() : kind_(RingKind::Integers) {}

  static RingSpec integers() { return RingSpec(); }
  static RingSpec rational_poly();
  static RingSpec prime_field_poly(Int p);  // InputError unless p is prime

  // Accepts "Z", "Q[x]" and "GF(p)[x]" with p a decimal prime.
  static RingSpec parse(std::string_view text);
  std::string to_string() const;

  RingKind kind() const { return kind_; }
  bool is_poly() const { return kind_ != RingKind::Integers; }
  const Int& prime() const { return prime_; }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind_ == b.kind_ && a.prime_ == b.prime_;
  }
  friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

 private:
  RingKind kind_;
  Int prime_;  // zero unless PrimeFieldPoly
};

// One value tagged with its ring. Values only combine with values of the
// same ring; mixing throws MixedRingError. Polynomials store coefficients
// low degree first with no trailing zeros (zero == empty vector).
class RingElem {
 public:
  RingElem() : ring_(), payload_(Int(0)) {}  // zero over Z

  static RingElem zero(const RingSpec& ring);
  static RingElem one(const RingSpec& ring);
  static RingElem integer(Int value);  // over Z
  static RingElem constant(const RingSpec& ring, long long value);
  // Coefficients low degree first; reduced/validated against the ring.
  static RingElem poly(const RingSpec& ring, std::vector<Rat> coefficients);

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  const Int& int_value() const;               // Integers payload only
  const std::vector<Rat>& coefficients() const;  // polynomial payload only
  int degree() const;  // polynomial payload; -1 for the zero polynomial

  RingElem operator-() const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b);
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

 private:
  RingSpec ring_;
  std::variant<Int, std::vector<Rat>> payload_;
};

// Unit-normalized associate: |a| over Z, the monic associate over the
// polynomial rings, 0 for 0.
RingElem normalize(const RingElem& a);

// gcd(0, a) = normalize(a); result is always normalized.
RingElem gcd(const RingElem& a, const RingElem& b);
// gcd of a list; 0 for the empty list.
RingElem gcd_all(const RingSpec& ring, std::span<const RingElem> values);

// lcm(0, a) = 0; result is always normalized.
RingElem lcm(const RingElem& a, const RingElem& b);
// lcm of a list; 1 for the empty list.
RingElem lcm_all(const RingSpec& ring, std::span<const RingElem> values);

struct Egcd {
  RingElem g, s, t;  // g = gcd(a, b) normalized, g == s*a + t*b
};
Egcd egcd(const RingElem& a, const RingElem& b);

// Whether a divides b; 0 divides only 0.
bool divides(const RingElem& a, const RingElem& b);

// b / a when the division is exact, InexactDivisionError otherwise.
RingElem exact_div(const RingElem& b, const RingElem& a);

// Euclidean division b = q*m + r with the canonical remainder; returns r.
// m == 0 returns b unchanged; a unit m returns 0.
RingElem mod_canonical(const RingElem& b, const RingElem& m);

// Inverse of a modulo m, canonical. For m == 0, a must be a unit (the exact
// constraint admits only its unit inverse); for m a unit, returns 0.
// DomainError when gcd(a, m) is not a unit.
RingElem inv_mod(const RingElem& a, const RingElem& m);

// Simultaneous congruences x = residue (mod modulus) over one ring.
// A zero modulus pins x exactly; a unit modulus adds no constraint.
class CongruenceSystem {
 public:
  struct Condition {
    RingElem residue;
    RingElem modulus;
  };

  explicit CongruenceSystem(RingSpec ring) : ring_(std::move(ring)) {}
  const RingSpec& ring() const { return ring_; }
  void add(RingElem residue, RingElem modulus);
  std::span<const Condition> conditions() const { return conditions_; }
  std::size_t size() const { return conditions_.size(); }

 private:
  RingSpec ring_;
  std::vector<Condition> conditions_;
};

// The canonical solution modulo the lcm of all moduli. Empty system -> 0.
// If exact constraints force a single value, that value is returned as is.
// IncompatibleSystemError (naming a violating pair) when unsolvable.
RingElem crt_solve(const CongruenceSystem& system);

// Expression parser. Over Z only signed decimal integer literals are
// accepted. Over the polynomial rings: + - * ^, parentheses, the variable x,
// and integer or rational (a/b) literals; implicit multiplication is not
// allowed. Throws ParseError with a position.
RingElem parse_elem(const RingSpec& ring, std::string_view text);

// Canonical rendering; parse_elem(ring, print_elem(e)) == e.
std::string print_elem(const RingElem& e);
std::ostream& operator<<(std::ostream& os, const RingElem& e);

}  // namespace gspline

#endif
