#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace kakeya {

/// An element of a finite field, identified by its table index in [0, q).
/// For q = p^k the index encodes the coefficients of the representing
/// polynomial in base p: index = c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
struct Felt {
  unsigned idx = 0;

  friend constexpr auto operator<=>(Felt, Felt) = default;
};

enum class ArithKind { Add, Sub, Mul, Div, Neg, Inv };

/// Precomputed arithmetic for GF(p^k) with q = p^k <= 256.
///
/// Immutable after construction. Index 0 is zero and index 1 is one.
class FieldTable {
 public:
  static constexpr unsigned kMaxOrder = 256;

  /// Builds GF(p^k). For k > 1 the modulus is the lexicographically
  /// smallest monic irreducible polynomial of degree k, with coefficient
  /// tuples compared constant term first.
  FieldTable(unsigned p, unsigned k);

  unsigned p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  unsigned q() const noexcept { return q_; }
  bool odd() const noexcept { return p_ != 2; }

  /// Coefficients c_0..c_k of the monic modulus (c_k = 1), or nullopt for
  /// prime fields.
  const std::optional<std::vector<unsigned>>& modulus() const noexcept { return modulus_; }

  /// Validated conversion from an integer index.
  Felt element(long long idx) const;
  bool valid(Felt a) const noexcept { return a.idx < q_; }

  Felt zero() const noexcept { return Felt{0}; }
  Felt one() const noexcept { return Felt{1}; }

  Felt add(Felt a, Felt b) const noexcept { return Felt{add_[a.idx * q_ + b.idx]}; }
  Felt mul(Felt a, Felt b) const noexcept { return Felt{mul_[a.idx * q_ + b.idx]}; }
  Felt neg(Felt a) const noexcept { return Felt{neg_[a.idx]}; }
  Felt sub(Felt a, Felt b) const noexcept { return add(a, neg(b)); }
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

  /// Dispatches on kind; b is required for the binary operations.
  Felt arith(ArithKind kind, Felt a, std::optional<Felt> b = std::nullopt) const;

  /// Raw row-major tables, q*q entries each.
  const std::vector<std::uint8_t>& add_table() const noexcept { return add_; }
  const std::vector<std::uint8_t>& mul_table() const noexcept { return mul_; }

 private:
  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::optional<std::vector<unsigned>> modulus_;
  // q <= 256, so every index fits in a byte.
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;  // inv_[0] unused
};

using Field = std::shared_ptr<const FieldTable>;

/// field_create: throws Error{NotPrime, OrderTooLarge, InvalidDegree}.
Field make_field(unsigned p, unsigned k = 1);

/// Product of all q-1 nonzero elements. Equals -1 for odd q and 1 for even q.
Felt nonzero_product(const FieldTable& field);

bool is_prime(unsigned n) noexcept;

struct FieldAudit {
  bool axioms_hold = true;
  std::uint64_t checks = 0;
};

/// Exhaustive check of the field axioms over all pairs and triples.
FieldAudit audit_field(const FieldTable& field);

}  // namespace kakeya
