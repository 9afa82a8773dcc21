#include "evokit/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "evokit/errors.hpp"

namespace evokit {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Splits an optional leading sign from a numeric token.
std::string_view strip_sign(std::string_view s, bool* negative) {
  *negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    *negative = (s[0] == '-');
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p, std::uint64_t max_modulus) {
  if (p > max_modulus) {
    throw CapExceeded("modulus " + std::to_string(p) + " exceeds cap " +
                      std::to_string(max_modulus));
  }
  if (!is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.kind = FieldKind::PrimeField;
  f.modulus = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text, std::uint64_t max_modulus) {
  if (text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string_view inner = text.substr(3, text.size() - 4);
    if (!all_digits(inner)) {
      throw DomainError("bad field spec: " + std::string(text));
    }
    mpz_class p(std::string(inner), 10);
    if (!p.fits_ulong_p()) {
      throw CapExceeded("modulus in " + std::string(text) + " exceeds cap " +
                        std::to_string(max_modulus));
    }
    return prime_field(p.get_ui(), max_modulus);
  }
  throw DomainError("bad field spec: " + std::string(text) +
                    " (expected \"Q\" or \"GF(p)\")");
}

std::string FieldSpec::to_string() const {
  if (kind == FieldKind::Rationals) return "Q";
  return "GF(" + std::to_string(modulus) + ")";
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(0, f); }

Scalar Scalar::one(const FieldSpec& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals) {
    s.q_ = v;
  } else {
    long long m = static_cast<long long>(f.modulus);
    long long r = static_cast<long long>(v) % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(const mpq_class& v) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.q_ = v;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(std::uint64_t r, const FieldSpec& f) {
  if (f.kind != FieldKind::PrimeField) {
    throw DomainError("residue scalar requires a prime field");
  }
  Scalar s;
  s.field_ = f;
  s.r_ = r % f.modulus;
  return s;
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
  bool negative = false;
  std::string_view body = strip_sign(text, &negative);
  std::size_t slash = body.find('/');

  if (f.kind == FieldKind::PrimeField) {
    if (slash != std::string_view::npos || !all_digits(body)) {
      throw DomainError("bad GF(p) scalar: " + std::string(text));
    }
    mpz_class v(std::string(body), 10);
    mpz_class r = v % mpz_class(static_cast<unsigned long>(f.modulus));
    std::uint64_t u = r.get_ui();
    if (negative && u != 0) u = f.modulus - u;
    return residue(u, f);
  }

  std::string_view num = body;
  std::string_view den = "1";
  bool den_negative = false;
  if (slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = strip_sign(body.substr(slash + 1), &den_negative);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("bad rational scalar: " + std::string(text));
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw DomainError("zero denominator in scalar: " + std::string(text));
  }
  if (negative != den_negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return rational(q);
}

std::string Scalar::to_string() const {
  if (field_.kind == FieldKind::PrimeField) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw DomainError("scalar field mismatch: " + field_.to_string() +
                      " vs " + rhs.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = q_ + rhs.q_;
  } else {
    out.r_ = (r_ + rhs.r_) % field_.modulus;
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = q_ - rhs.q_;
  } else {
    out.r_ = (r_ + field_.modulus - rhs.r_) % field_.modulus;
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = q_ * rhs.q_;
  } else {
    out.r_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(r_) * rhs.r_) % field_.modulus);
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.modulus - r_;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = mod_inverse(r_, field_.modulus);
  }
  return out;
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar out = *this;
  if (field_.kind == FieldKind::Rationals) {
    if (e == 0) {
      out.q_ = 1;
      return out;
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(),
               static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(),
               static_cast<unsigned long>(e));
    out.q_ = mpq_class(num, den);  // already canonical: gcd(num,den)=1
    return out;
  }
  if (e == 0) {
    out.r_ = 1;
    return out;
  }
  if (r_ == 0) return out;
  std::uint64_t k = field_.modulus - 1;  // units have order dividing p-1
  out.r_ = mod_pow(r_, static_cast<std::uint64_t>(e) % k, field_.modulus);
  return out;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  return field_.kind == FieldKind::Rationals ? q_ == rhs.q_ : r_ == rhs.r_;
}

int Scalar::cmp(const Scalar& rhs) const {
  require_same_field(rhs);
  if (field_.kind == FieldKind::Rationals) {
    return ::cmp(q_, rhs.q_);
  }
  if (r_ < rhs.r_) return -1;
  return r_ > rhs.r_ ? 1 : 0;
}

const mpq_class& Scalar::rational_value() const {
  if (field_.kind != FieldKind::Rationals) {
    throw DomainError("rational_value on a GF(p) scalar");
  }
  return q_;
}

std::uint64_t Scalar::residue_value() const {
  if (field_.kind != FieldKind::PrimeField) {
    throw DomainError("residue_value on a rational scalar");
  }
  return r_;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % p;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t p) {
  if (x % p == 0) throw DomainError("inverse of zero residue");
  return mod_pow(x % p, p - 2, p);
}

namespace {

// Exact m-th root of a nonnegative integer, if one exists.
bool perfect_root(const mpz_class& v, unsigned long m, mpz_class* root) {
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), m);
  if (exact == 0) return false;
  *root = r;
  return true;
}

}  // namespace

std::vector<Scalar> nth_roots(const Scalar& c, std::uint64_t m) {
  if (m == 0) throw DomainError("nth_roots requires m >= 1");
  if (c.is_zero()) throw DomainError("nth_roots requires a nonzero value");
  if (m == 1) return {c};

  std::vector<Scalar> roots;
  const FieldSpec& f = c.field();

  if (f.kind == FieldKind::Rationals) {
    const mpq_class& q = c.rational_value();
    bool negative = q < 0;
    if (negative && m % 2 == 0) return {};
    mpz_class num = abs(mpz_class(q.get_num()));
    mpz_class den = q.get_den();
    mpz_class rn, rd;
    if (!perfect_root(num, static_cast<unsigned long>(m), &rn)) return {};
    if (!perfect_root(den, static_cast<unsigned long>(m), &rd)) return {};
    if (negative) rn = -rn;  // m odd here
    mpq_class r(rn, rd);     // canonical since num/den was canonical
    roots.push_back(Scalar::rational(r));
    if (!negative && m % 2 == 0 && rn != 0) {
      roots.push_back(Scalar::rational(mpq_class(-rn, rd)));
    }
  } else {
    std::uint64_t p = f.modulus;
    std::uint64_t target = c.residue_value();
    std::uint64_t e = m % (p - 1);
    // x^m = c has either 0 or gcd(m, p-1) solutions among the units.
    std::uint64_t bound = std::gcd(m, p - 1);
    for (std::uint64_t x = 1; x < p && roots.size() < bound; ++x) {
      if (mod_pow(x, e, p) == target) {
        roots.push_back(Scalar::residue(x, f));
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace evokit
