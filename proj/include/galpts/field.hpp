#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace galpts {

/// Raised when an algebraic precondition fails (division by zero, a missing
/// root, a check that should hold identically).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for invalid user parameters (non-prime p, size caps, family
/// constraints).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of some finite field, encoded as the integer sum c_i p^i of its
/// coordinates in the polynomial basis 1, g, g^2, ... . Meaningless without
/// the Field it came from.
struct Elem {
  uint32_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr uint64_t kDefaultFieldCap = uint64_t{1} << 32;

/// F_{p^k} = F_p[g]/(modulus). Immutable after construction; safe to share.
///
/// Small fields (up to kTableLimit elements) use log/antilog/Zech tables,
/// larger ones fall back to schoolbook polynomial arithmetic. Both backends
/// produce identical encodings.
class Field {
 public:
  static constexpr uint64_t kTableLimit = uint64_t{1} << 20;

  /// Builds F_{p^k} with the lexicographically smallest monic irreducible
  /// modulus (smallest encoding of the lower coefficients). Results are cached.
  static std::shared_ptr<const Field> build(uint32_t p, unsigned k, uint64_t cap = kDefaultFieldCap);

  uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  uint64_t order() const { return order_; }
  /// Coefficients c_0..c_k of the monic modulus.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  bool uses_tables() const { return !log_.empty(); }
  std::string name() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The class of g (for k = 1 the modulus is x, so this is 0).
  Elem generator() const;
  Elem from_int(int64_t n) const;
  Elem from_digits(const std::vector<uint32_t>& digits) const;
  std::vector<uint32_t> digits(Elem a) const;
  bool in_prime_field(Elem a) const { return a.v < p_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const;
  /// a^(p^i); the exponent is reduced modulo k.
  Elem frobenius(Elem a, uint64_t i = 1) const;

  Elem random(std::mt19937_64& rng) const;
  /// A generator of the multiplicative group.
  Elem primitive_element() const { return primitive_; }

 private:
  Field(uint32_t p, unsigned k, std::vector<uint32_t> modulus);
  Elem mul_slow(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b) const;
  void find_primitive();
  void build_tables();

  uint32_t p_;
  unsigned k_;
  uint64_t order_;
  std::vector<uint32_t> modulus_;
  std::vector<uint64_t> place_;  // p^i
  Elem primitive_{};
  // tables (empty for the polynomial backend)
  std::vector<uint32_t> log_;
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> zech_;  // log(1 + g^n), or kNoLog when 1 + g^n == 0
  static constexpr uint32_t kNoLog = 0xffffffffu;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Convenience wrapper: build_field(p, k) == Field::build(p, k).
FieldPtr build_field(uint32_t p, unsigned k, uint64_t cap = kDefaultFieldCap);

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);
uint64_t ipow(uint64_t b, unsigned e);

/// Ring homomorphism src -> dst fixing F_p, determined by the image of the
/// generator of src (a root of src's modulus in dst).
class FieldHom {
 public:
  FieldHom(FieldPtr src, FieldPtr dst, Elem generator_image);
  const FieldPtr& src() const { return src_; }
  const FieldPtr& dst() const { return dst_; }
  Elem generator_image() const { return gen_image_; }
  Elem operator()(Elem a) const;
  bool is_identity() const { return src_ == dst_; }

 private:
  FieldPtr src_, dst_;
  Elem gen_image_;
  std::vector<Elem> basis_images_;
  std::vector<Elem> table_;  // full map when src is small
};

/// Embeds src into dst (src.k | dst.k). embed(F, F) is the identity.
FieldHom embed(const FieldPtr& src, const FieldPtr& dst);

/// Term a * T^(p^i) of a p-linearized polynomial.
struct AdditiveTerm {
  unsigned frobenius_power;
  Elem coeff;
};

/// All T in the field with sum a_i T^(p^i) = rhs, via F_p-linear algebra.
std::vector<Elem> solve_additive(const std::vector<AdditiveTerm>& op, Elem rhs, const Field& f);

/// T^(p^n) + T as a list of terms.
std::vector<AdditiveTerm> artin_schreier_op(const Field& f, unsigned n);

}  // namespace galpts
