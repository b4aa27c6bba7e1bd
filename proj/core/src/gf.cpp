#include "srmk/gf.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <limits>
#include <sstream>

#include "poly.hpp"
#include "srmk/errors.hpp"

namespace srmk {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr std::uint32_t kBaseTableLimit = 1u << 16;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string poly_string(std::span<const BaseField::value_type> c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

/// Inverse of a square matrix over `f` by Gauss-Jordan; empty when singular.
std::vector<BaseField::value_type> invert_small(const BaseField& f, std::vector<BaseField::value_type> a,
                                                std::size_t n) {
  std::vector<BaseField::value_type> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return {};
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    }
    const auto c = f.inv(a[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = f.mul(a[col * n + j], c);
      inv[col * n + j] = f.mul(inv[col * n + j], c);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const auto factor = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
        inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
      }
    }
  }
  return inv;
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(std::uint32_t p) : BaseField(p, 1, {}) {}

BaseField::BaseField(std::uint32_t p, std::uint32_t e, std::vector<value_type> modulus)
    : p_(p), e_(e), q_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p) || p >= (1u << 31)) throw InvalidField("characteristic " + std::to_string(p) + " is not a supported prime");
  if (e == 0) throw InvalidField("base-field degree must be at least 1");
  if (e == 1) {
    modulus_.clear();
    return;
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kBaseTableLimit) throw InvalidField("base field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.size() != e + 1 || modulus_.back() != 1)
    throw InvalidField("base modulus must be monic of degree " + std::to_string(e));
  for (auto c : modulus_)
    if (c >= p) throw InvalidField("base modulus coefficient out of range");
  const BaseField prime(p);
  if (!detail::rabin_irreducible(prime, modulus_))
    throw InvalidField("base modulus " + poly_string(modulus_) + " is reducible over F_" + std::to_string(p));
  build_tables();
}

BaseField::value_type BaseField::add_digits(value_type a, value_type b) const noexcept {
  value_type r = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const value_type s = a % p_ + b % p_;
    r += (s >= p_ ? s - p_ : s) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

BaseField::value_type BaseField::neg_digits(value_type a) const noexcept {
  value_type r = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const value_type d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

BaseField::value_type BaseField::mul_slow(value_type a, value_type b) const {
  const BaseField prime(p_);
  auto digits = [&](value_type v) {
    detail::Poly d(e_);
    for (auto& x : d) {
      x = v % p_;
      v /= p_;
    }
    detail::trim(d);
    return d;
  };
  const auto r = detail::poly_mulmod(prime, digits(a), digits(b), modulus_);
  value_type out = 0, scale = 1;
  for (auto c : r) {
    out += c * scale;
    scale *= p_;
  }
  return out;
}

void BaseField::build_tables() {
  const std::uint32_t group = q_ - 1;
  auto order_is_full = [&](value_type g) {
    for (auto r : detail::prime_factors(group)) {
      value_type x = 1;
      // x = g^{group / r}
      std::uint64_t ex = group / r;
      value_type base = g;
      while (ex) {
        if (ex & 1) x = mul_slow(x, base);
        base = mul_slow(base, base);
        ex >>= 1;
      }
      if (x == 1) return false;
    }
    return true;
  };
  value_type g = 1;
  for (value_type c = 2; c < q_; ++c) {
    if (order_is_full(c)) {
      g = c;
      break;
    }
  }
  exp_.assign(2 * std::size_t{group}, 0);
  log_.assign(q_, 0);
  value_type x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = exp_[i + group] = x;
    log_[x] = i;
    x = mul_slow(x, g);
  }
}

BaseField::value_type BaseField::inv(value_type a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  if (e_ > 1) return exp_[(q_ - 1) - log_[a]];
  std::int64_t t0 = 0, t1 = 1, r0 = p_, r1 = a;
  while (r1 != 0) {
    const std::int64_t qt = r0 / r1;
    std::tie(t0, t1) = std::pair{t1, t0 - qt * t1};
    std::tie(r0, r1) = std::pair{r1, r0 - qt * r1};
  }
  if (t0 < 0) t0 += p_;
  return static_cast<value_type>(t0);
}

BaseField::value_type BaseField::pow(value_type a, std::uint64_t exponent) const {
  value_type r = 1;
  while (exponent) {
    if (exponent & 1) r = mul(r, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return r;
}

bool is_irreducible(const BaseField& field, std::span<const BaseField::value_type> poly) {
  detail::Poly f(poly.begin(), poly.end());
  detail::trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  return detail::rabin_irreducible(field, f);
}

std::vector<BaseField::value_type> first_irreducible(const BaseField& field, std::uint32_t degree) {
  if (degree == 0) throw InvalidField("irreducible polynomial degree must be positive");
  const std::uint64_t q = field.order();
  std::vector<BaseField::value_type> f(degree + 1, 0);
  f[degree] = 1;
  // Counter over the lower coefficients, constant term fastest.
  while (true) {
    if (is_irreducible(field, f)) return f;
    std::uint32_t i = 0;
    while (i < degree) {
      if (++f[i] < q) break;
      f[i++] = 0;
    }
    if (i == degree) break;
  }
  throw InvalidField("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// FieldTower

FieldTower::FieldTower(Params params) : params_(std::move(params)) {
  base_ = std::make_shared<const BaseField>(params_.p, params_.e, params_.base_modulus);
  params_.base_modulus = base_->modulus();
  m_ = params_.m;
  if (m_ == 0) throw InvalidField("extension degree must be at least 1");
  modulus_ = params_.ext_modulus;
  if (modulus_.size() != m_ + 1 || modulus_.back() != 1)
    throw InvalidField("extension modulus must be monic of degree " + std::to_string(m_));
  for (auto c : modulus_)
    if (!base_->contains(c)) throw InvalidField("extension modulus coefficient out of range");
  if (!is_irreducible(*base_, modulus_))
    throw InvalidField("extension modulus " + poly_string(modulus_) + " is reducible over F_" +
                       std::to_string(base_->order()));

  const std::uint64_t q = base_->order();
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (order > (std::uint64_t{1} << 62) / q) throw InvalidField("field order exceeds 2^62");
    order *= q;
  }
  order_ = order;
  char_two_ = base_->characteristic() == 2;
  alpha_ = m_ >= 2 ? value_type{q} : value_type{base_->neg(modulus_[0])};

  if (order_ <= kTableLimit) build_tables();
  setup_basis();
}

std::shared_ptr<const FieldTower> FieldTower::create(Params params) {
  return std::make_shared<const FieldTower>(std::move(params));
}

std::vector<FieldTower::base_type> FieldTower::coords(value_type a) const {
  std::vector<base_type> c(m_);
  const std::uint64_t q = base_->order();
  for (auto& x : c) {
    x = static_cast<base_type>(a % q);
    a /= q;
  }
  return c;
}

FieldTower::value_type FieldTower::from_coords(std::span<const base_type> c) const {
  if (c.size() != m_) throw StructuralError("coordinate vector has length " + std::to_string(c.size()) +
                                            ", expected " + std::to_string(m_));
  value_type v = 0;
  const std::uint64_t q = base_->order();
  for (std::size_t j = c.size(); j-- > 0;) {
    if (!base_->contains(c[j])) throw StructuralError("coordinate out of range");
    v = v * q + c[j];
  }
  return v;
}

FieldTower::value_type FieldTower::add_slow(value_type a, value_type b) const noexcept {
  const std::uint64_t q = base_->order();
  value_type r = 0, scale = 1;
  for (std::uint32_t j = 0; j < m_; ++j) {
    r += base_->add(static_cast<base_type>(a % q), static_cast<base_type>(b % q)) * scale;
    a /= q;
    b /= q;
    scale *= q;
  }
  return r;
}

FieldTower::value_type FieldTower::neg_slow(value_type a) const noexcept {
  const std::uint64_t q = base_->order();
  value_type r = 0, scale = 1;
  for (std::uint32_t j = 0; j < m_; ++j) {
    r += base_->neg(static_cast<base_type>(a % q)) * scale;
    a /= q;
    scale *= q;
  }
  return r;
}

FieldTower::value_type FieldTower::mul_slow(value_type a, value_type b) const {
  detail::Poly pa = coords(a), pb = coords(b);
  detail::trim(pa);
  detail::trim(pb);
  auto r = detail::poly_mulmod(*base_, pa, pb, modulus_);
  r.resize(m_, 0);
  return from_coords(r);
}

FieldTower::value_type FieldTower::inv_slow(value_type a) const {
  detail::Poly pa = coords(a);
  detail::trim(pa);
  auto r = detail::poly_inverse_mod(*base_, pa, modulus_);
  if (!r) throw DivisionByZero("element is not invertible");
  r->resize(m_, 0);
  return from_coords(*r);
}

FieldTower::value_type FieldTower::pow_slow(value_type a, std::uint64_t exponent) const {
  value_type r = 1;
  while (exponent) {
    if (exponent & 1) r = mul_slow(r, a);
    exponent >>= 1;
    if (exponent) a = mul_slow(a, a);
  }
  return r;
}

void FieldTower::build_tables() {
  const std::uint64_t group = order_ - 1;
  group_order_ = static_cast<std::uint32_t>(group);
  const auto factors = detail::prime_factors(group);
  auto primitive = [&](value_type g) {
    for (auto r : factors)
      if (pow_slow(g, group / r) == 1) return false;
    return true;
  };
  value_type g = 1;
  if (group > 1) {
    // Prefer alpha when the modulus is primitive, so exp_ enumerates alpha powers.
    if (alpha_ != 0 && primitive(alpha_)) {
      g = alpha_;
    } else {
      for (value_type c = 2; c < order_; ++c)
        if (primitive(c)) {
          g = c;
          break;
        }
    }
  }
  exp_.assign(2 * group, 0);
  log_.assign(order_, 0);
  value_type x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = exp_[i + group] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
  zech_.assign(group, -1);
  for (std::uint64_t k = 0; k < group; ++k) {
    const value_type s = add_slow(1, exp_[k]);
    zech_[k] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
  }
  tables_ = true;
}

void FieldTower::setup_basis() {
  basis_.resize(m_);
  const std::uint64_t q = base_->order();
  value_type power = 1;
  for (std::uint32_t j = 0; j < m_; ++j, power *= q) basis_[j] = power;
  if (params_.basis.empty() || params_.basis == basis_) {
    params_.basis.clear();
    poly_basis_ = true;
    return;
  }
  if (params_.basis.size() != m_) throw InvalidField("basis must have exactly m elements");
  for (auto b : params_.basis)
    if (!contains(b)) throw InvalidField("basis element out of range");
  basis_ = params_.basis;
  basis_matrix_.assign(std::size_t{m_} * m_, 0);
  for (std::uint32_t j = 0; j < m_; ++j) {
    const auto c = coords(basis_[j]);
    for (std::uint32_t i = 0; i < m_; ++i) basis_matrix_[i * m_ + j] = c[i];
  }
  basis_inverse_ = invert_small(*base_, basis_matrix_, m_);
  if (basis_inverse_.empty()) throw InvalidField("basis elements are not linearly independent over F_q");
  poly_basis_ = false;
}

FieldTower::value_type FieldTower::inv(value_type a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + describe());
  if (tables_) return exp_[group_order_ - log_[a]];
  return inv_slow(a);
}

FieldTower::value_type FieldTower::pow(value_type a, std::uint64_t exponent) const {
  value_type r = 1;
  while (exponent) {
    if (exponent & 1) r = mul(r, a);
    exponent >>= 1;
    if (exponent) a = mul(a, a);
  }
  return r;
}

void FieldTower::ext_into(value_type a, std::span<base_type> out) const {
  if (out.size() != m_) throw StructuralError("ext output has wrong length");
  const std::uint64_t q = base_->order();
  if (poly_basis_) {
    for (auto& x : out) {
      x = static_cast<base_type>(a % q);
      a /= q;
    }
    return;
  }
  const auto c = coords(a);
  for (std::uint32_t i = 0; i < m_; ++i) {
    base_type acc = 0;
    for (std::uint32_t j = 0; j < m_; ++j) acc = base_->add(acc, base_->mul(basis_inverse_[i * m_ + j], c[j]));
    out[i] = acc;
  }
}

std::vector<FieldTower::base_type> FieldTower::ext(value_type a) const {
  std::vector<base_type> out(m_);
  ext_into(a, out);
  return out;
}

FieldTower::value_type FieldTower::unext(std::span<const base_type> v) const {
  if (v.size() != m_) throw StructuralError("unext expects a vector of length " + std::to_string(m_));
  if (poly_basis_) return from_coords(v);
  std::vector<base_type> c(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    base_type acc = 0;
    for (std::uint32_t j = 0; j < m_; ++j) {
      if (!base_->contains(v[j])) throw StructuralError("coordinate out of range");
      acc = base_->add(acc, base_->mul(basis_matrix_[i * m_ + j], v[j]));
    }
    c[i] = acc;
  }
  return from_coords(c);
}

std::uint64_t FieldTower::to_wire(value_type a) const {
  if (poly_basis_) return a;
  const auto c = ext(a);
  std::uint64_t v = 0;
  for (std::size_t j = c.size(); j-- > 0;) v = v * base_->order() + c[j];
  return v;
}

FieldTower::value_type FieldTower::from_wire(std::uint64_t code) const {
  if (code >= order_)
    throw StructuralError("element code " + std::to_string(code) + " out of range for " + describe());
  if (poly_basis_) return code;
  std::vector<base_type> c(m_);
  for (auto& x : c) {
    x = static_cast<base_type>(code % base_->order());
    code /= base_->order();
  }
  return unext(c);
}

bool FieldTower::same_as(const FieldTower& other) const noexcept {
  if (this == &other) return true;
  return *base_ == *other.base_ && m_ == other.m_ && modulus_ == other.modulus_ &&
         params_.basis == other.params_.basis;
}

std::string FieldTower::describe() const {
  std::ostringstream os;
  os << "F_{" << base_->characteristic();
  if (base_->degree() > 1) os << '^' << base_->degree();
  os << '^' << m_ << "} mod " << poly_string(modulus_);
  return os.str();
}

TowerPtr make_tower(std::uint32_t p, std::uint32_t m) {
  const BaseField prime(p);
  return make_tower(p, m, first_irreducible(prime, m));
}

TowerPtr make_tower(std::uint32_t p, std::uint32_t m, std::vector<BaseField::value_type> ext_modulus) {
  FieldTower::Params params;
  params.p = p;
  params.m = m;
  params.ext_modulus = std::move(ext_modulus);
  return FieldTower::create(std::move(params));
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

const FieldTower& common_tower(const Scalar& a, const Scalar& b) {
  if (a.tower() != b.tower() && !a.tower()->same_as(*b.tower()))
    throw StructuralError("scalars belong to different field towers");
  return *a.tower();
}

}  // namespace

Scalar::Scalar(TowerPtr tower, value_type value) : tower_(std::move(tower)), value_(value) {
  if (!tower_) throw StructuralError("scalar without a field");
  if (!tower_->contains(value_)) throw StructuralError("scalar value out of range for " + tower_->describe());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(a.tower_, common_tower(a, b).add(a.value_, b.value_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return Scalar(a.tower_, common_tower(a, b).sub(a.value_, b.value_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(a.tower_, common_tower(a, b).mul(a.value_, b.value_));
}

Scalar operator-(const Scalar& a) { return Scalar(a.tower_, a.tower_->neg(a.value_)); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.value_ == b.value_ && (a.tower_ == b.tower_ || a.tower_->same_as(*b.tower_));
}

Scalar inv(const Scalar& a) { return Scalar(a.tower(), a.tower()->inv(a.value())); }

Scalar pow(const Scalar& a, std::uint64_t exponent) { return Scalar(a.tower(), a.tower()->pow(a.value(), exponent)); }

std::vector<BaseField::value_type> ext(const Scalar& a) { return a.tower()->ext(a.value()); }

Scalar unext(const TowerPtr& tower, std::span<const BaseField::value_type> v) {
  return Scalar(tower, tower->unext(v));
}

}  // namespace srmk
