#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace srmk {

/// The base field F_q, q = p^e.
///
/// Elements are integer codes sum_i d_i p^i, where (d_0, ..., d_{e-1}) are the
/// coordinates over F_p with respect to the polynomial basis modulo `modulus()`.
/// For e = 1 the code is simply the residue mod p.
class BaseField {
 public:
  using value_type = std::uint32_t;

  /// Prime field F_p.
  explicit BaseField(std::uint32_t p);

  /// F_{p^e} built over F_p with the given monic irreducible modulus of degree e
  /// (little-endian coefficients). e = 1 with an empty modulus is the prime field.
  BaseField(std::uint32_t p, std::uint32_t e, std::vector<value_type> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<value_type>& modulus() const noexcept { return modulus_; }

  static constexpr value_type zero() noexcept { return 0; }
  static constexpr value_type one() noexcept { return 1; }
  static constexpr bool is_zero(value_type a) noexcept { return a == 0; }

  value_type add(value_type a, value_type b) const noexcept {
    if (e_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_digits(a, b);
  }
  value_type neg(value_type a) const noexcept {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_digits(a);
  }
  value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const noexcept {
    if (e_ == 1) {
      return static_cast<value_type>(std::uint64_t{a} * b % p_);
    }
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t exponent) const;

  bool contains(std::uint64_t code) const noexcept { return code < q_; }

  bool operator==(const BaseField& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  value_type add_digits(value_type a, value_type b) const noexcept;
  value_type neg_digits(value_type a) const noexcept;
  value_type mul_slow(value_type a, value_type b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<value_type> modulus_;
  std::vector<value_type> exp_;  // length 2(q-1), only for e > 1
  std::vector<value_type> log_;
};

/// The extension F_{q^m} over a BaseField, with an ordered F_q-basis b.
///
/// Elements are integer codes sum_j c_j q^j where (c_0, ..., c_{m-1}) are the
/// coordinates in the *polynomial* basis (1, x, ..., x^{m-1}) modulo the
/// extension modulus. `ext`/`unext` translate to and from coordinates in b,
/// and `to_wire`/`from_wire` apply the same change of basis to integer codes.
/// For fields with at most 2^20 elements, multiplication and addition go
/// through exp/log/Zech tables.
class FieldTower {
 public:
  using value_type = std::uint64_t;
  using base_type = BaseField::value_type;

  struct Params {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t m = 1;
    std::vector<base_type> base_modulus;  ///< over F_p, degree e; empty when e = 1
    std::vector<base_type> ext_modulus;   ///< over F_q, monic of degree m
    std::vector<value_type> basis;        ///< polynomial-basis codes; empty means (1, x, ..., x^{m-1})
  };

  explicit FieldTower(Params params);

  static std::shared_ptr<const FieldTower> create(Params params);

  const BaseField& base() const noexcept { return *base_; }
  const std::shared_ptr<const BaseField>& base_ptr() const noexcept { return base_; }
  std::uint32_t q() const noexcept { return base_->order(); }
  std::uint32_t m() const noexcept { return m_; }
  value_type order() const noexcept { return order_; }
  const Params& params() const noexcept { return params_; }
  bool has_polynomial_basis() const noexcept { return poly_basis_; }
  const std::vector<value_type>& basis() const noexcept { return basis_; }

  static constexpr value_type zero() noexcept { return 0; }
  static constexpr value_type one() noexcept { return 1; }
  static constexpr bool is_zero(value_type a) noexcept { return a == 0; }

  /// Residue class of the indeterminate.
  value_type alpha() const noexcept { return alpha_; }

  value_type add(value_type a, value_type b) const noexcept {
    if (char_two_) return a ^ b;
    if (tables_) {
      if (a == 0) return b;
      if (b == 0) return a;
      const std::uint32_t la = log_[a];
      const std::uint32_t lb = log_[b];
      const std::uint32_t d = lb >= la ? lb - la : lb + group_order_ - la;
      const std::int32_t z = zech_[d];
      if (z < 0) return 0;
      return exp_[la + static_cast<std::uint32_t>(z)];
    }
    return add_slow(a, b);
  }
  value_type neg(value_type a) const noexcept {
    if (char_two_ || a == 0) return a;
    if (tables_) return exp_[log_[a] + group_order_ / 2];
    return neg_slow(a);
  }
  value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t exponent) const;

  /// Canonical embedding F_q -> F_{q^m}.
  value_type embed(base_type c) const noexcept { return c; }
  bool in_base(value_type a) const noexcept { return a < q(); }
  bool contains(value_type a) const noexcept { return a < order_; }

  /// Polynomial-basis coordinates.
  std::vector<base_type> coords(value_type a) const;
  value_type from_coords(std::span<const base_type> coords) const;

  /// Coordinates with respect to the basis b: b . ext(a) = a.
  std::vector<base_type> ext(value_type a) const;
  void ext_into(value_type a, std::span<base_type> out) const;
  value_type unext(std::span<const base_type> v) const;

  /// Integer encoding sum_j ext(a)_j q^j used for serialization.
  std::uint64_t to_wire(value_type a) const;
  value_type from_wire(std::uint64_t code) const;

  /// Same field, same moduli, same basis.
  bool same_as(const FieldTower& other) const noexcept;

  std::string describe() const;

 private:
  value_type add_slow(value_type a, value_type b) const noexcept;
  value_type neg_slow(value_type a) const noexcept;
  value_type mul_slow(value_type a, value_type b) const;
  value_type inv_slow(value_type a) const;
  value_type pow_slow(value_type a, std::uint64_t exponent) const;
  void build_tables();
  void setup_basis();

  Params params_;
  std::shared_ptr<const BaseField> base_;
  std::uint32_t m_;
  value_type order_;
  std::vector<base_type> modulus_;
  value_type alpha_ = 0;
  bool char_two_ = false;

  bool tables_ = false;
  std::uint32_t group_order_ = 0;
  std::vector<std::uint32_t> exp_;  // length 2(order-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;

  bool poly_basis_ = true;
  std::vector<value_type> basis_;
  std::vector<base_type> basis_matrix_;      // m x m, column j = coords(b_j)
  std::vector<base_type> basis_inverse_;     // m x m
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Lexicographically first monic irreducible polynomial of the given degree over `field`.
std::vector<BaseField::value_type> first_irreducible(const BaseField& field, std::uint32_t degree);

/// True iff `poly` (monic, little-endian) is irreducible over `field`.
bool is_irreducible(const BaseField& field, std::span<const BaseField::value_type> poly);

/// Convenience: F_{p^m} over the prime field with the first irreducible modulus.
TowerPtr make_tower(std::uint32_t p, std::uint32_t m);
TowerPtr make_tower(std::uint32_t p, std::uint32_t m, std::vector<BaseField::value_type> ext_modulus);

/// An F_{q^m} element bound to its tower. Mixing towers throws StructuralError.
class Scalar {
 public:
  using value_type = FieldTower::value_type;

  Scalar(TowerPtr tower, value_type value);

  const TowerPtr& tower() const noexcept { return tower_; }
  value_type value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  TowerPtr tower_;
  value_type value_;
};

Scalar inv(const Scalar& a);
Scalar pow(const Scalar& a, std::uint64_t exponent);
std::vector<BaseField::value_type> ext(const Scalar& a);
Scalar unext(const TowerPtr& tower, std::span<const BaseField::value_type> v);

}  // namespace srmk
