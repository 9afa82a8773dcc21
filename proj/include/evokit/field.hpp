#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evokit {

inline constexpr std::uint64_t kDefaultMaxModulus = std::uint64_t{1} << 31;

enum class FieldKind { Rationals, PrimeField };

// Coefficient field: either Q or GF(p) for a prime p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;  // prime p for PrimeField, 0 for Rationals

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint64_t p,
                               std::uint64_t max_modulus = kDefaultMaxModulus);

  // Accepts "Q" or "GF(p)".
  static FieldSpec parse(std::string_view text,
                         std::uint64_t max_modulus = kDefaultMaxModulus);
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;
};

// Exact field element.  Rational values are kept canonical (lowest terms,
// positive denominator); prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), q_(0) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(long v, const FieldSpec& f);
  static Scalar rational(const mpq_class& v);
  static Scalar residue(std::uint64_t r, const FieldSpec& f);

  // Text form: "-3/7" style for Q (denominator omitted when 1), bare
  // integers reduced mod p for GF(p).
  static Scalar parse(std::string_view text, const FieldSpec& f);
  std::string to_string() const;

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // rhs must be nonzero
  Scalar operator-() const;
  Scalar inverse() const;  // *this must be nonzero

  // Integer exponent, negative allowed for nonzero base.  Over GF(p) the
  // exponent acts through its residue mod p-1 on units.
  Scalar pow(std::int64_t e) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  // Total order used for canonical sorting of reported values.
  int cmp(const Scalar& rhs) const;
  bool operator<(const Scalar& rhs) const { return cmp(rhs) < 0; }

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  mpq_class q_;            // used when kind == Rationals
  std::uint64_t r_ = 0;    // used when kind == PrimeField
};

// All solutions x of x^m = c, m >= 1, sorted canonically.  Over Q at most
// two roots exist; over GF(p) the unit group is searched exhaustively.
// c must be nonzero.
std::vector<Scalar> nth_roots(const Scalar& c, std::uint64_t m);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t p);

}  // namespace evokit
