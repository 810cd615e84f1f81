#include "kakeya/gf.hpp"

#include <string>

#include "kakeya/error.hpp"

namespace kakeya {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IncompleteSearch: return "IncompleteSearch";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<unsigned>;  // coefficients over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& monic, unsigned p) {
  trim(a);
  const std::size_t dd = monic.size() - 1;
  while (a.size() > dd) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * monic[i]) % p) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of code (c_0 least significant).
Poly monic_from_code(unsigned code, unsigned degree, unsigned p) {
  Poly poly(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    poly[i] = code % p;
    code /= p;
  }
  poly[degree] = 1;
  return poly;
}

bool irreducible(const Poly& f, unsigned p) {
  const unsigned degree = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code)
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned k) {
  unsigned count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  // Walk tuples (c_0, ..., c_{k-1}) in lexicographic order: c_0 is the most
  // significant digit of the counter.
  for (unsigned rank = 0; rank < count; ++rank) {
    Poly f(k + 1, 0);
    unsigned r = rank;
    for (unsigned i = k; i-- > 0;) {
      f[i] = r % p;
      r /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
}

Poly digits(unsigned idx, unsigned p, unsigned k) {
  Poly d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

unsigned index_of(const Poly& d, unsigned p) {
  unsigned idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

}  // namespace

FieldTable::FieldTable(unsigned p, unsigned k) : p_(p), k_(k) {
  if (k < 1) throw Error(ErrorKind::InvalidDegree, "extension degree must be >= 1");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  unsigned long long order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxOrder)
      throw Error(ErrorKind::OrderTooLarge,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<unsigned>(order);

  if (k > 1) modulus_ = smallest_irreducible(p, k);

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<Poly> dig(q_);
  for (unsigned a = 0; a < q_; ++a) dig[a] = digits(a, p, k);

  for (unsigned a = 0; a < q_; ++a) {
    Poly n(k);
    for (unsigned i = 0; i < k; ++i) n[i] = (p - dig[a][i]) % p;
    neg_[a] = static_cast<std::uint8_t>(index_of(n, p));

    for (unsigned b = 0; b < q_; ++b) {
      Poly s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
      add_[a * q_ + b] = static_cast<std::uint8_t>(index_of(s, p));

      Poly prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
      if (modulus_) prod = poly_mod(std::move(prod), *modulus_, p);
      prod.resize(k, 0);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(index_of(prod, p));
    }
  }

  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
}

Felt FieldTable::element(long long idx) const {
  if (idx < 0 || idx >= static_cast<long long>(q_))
    throw Error(ErrorKind::InvalidElement,
                std::to_string(idx) + " is not an element index of GF(" + std::to_string(q_) + ")");
  return Felt{static_cast<unsigned>(idx)};
}

Felt FieldTable::inv(Felt a) const {
  if (a.idx == 0) throw Error(ErrorKind::DivisionByZero, "zero has no inverse");
  return Felt{inv_[a.idx]};
}

Felt FieldTable::arith(ArithKind kind, Felt a, std::optional<Felt> b) const {
  auto rhs = [&] {
    if (!b) throw Error(ErrorKind::InvalidElement, "binary operation needs two operands");
    return *b;
  };
  switch (kind) {
    case ArithKind::Add: return add(a, rhs());
    case ArithKind::Sub: return sub(a, rhs());
    case ArithKind::Mul: return mul(a, rhs());
    case ArithKind::Div: return div(a, rhs());
    case ArithKind::Neg: return neg(a);
    case ArithKind::Inv: return inv(a);
  }
  return a;
}

Field make_field(unsigned p, unsigned k) { return std::make_shared<const FieldTable>(p, k); }

Felt nonzero_product(const FieldTable& field) {
  Felt acc = field.one();
  for (unsigned a = 1; a < field.q(); ++a) acc = field.mul(acc, Felt{a});
  return acc;
}

FieldAudit audit_field(const FieldTable& f) {
  FieldAudit audit;
  const unsigned q = f.q();
  auto check = [&](bool ok) {
    ++audit.checks;
    if (!ok) audit.axioms_hold = false;
  };
  for (unsigned i = 0; i < q; ++i) {
    const Felt a{i};
    check(f.add(a, f.zero()) == a);
    check(f.mul(a, f.one()) == a);
    check(f.add(a, f.neg(a)) == f.zero());
    if (i != 0) check(f.mul(a, f.inv(a)) == f.one());
    for (unsigned j = 0; j < q; ++j) {
      const Felt b{j};
      check(f.add(a, b) == f.add(b, a));
      check(f.mul(a, b) == f.mul(b, a));
      for (unsigned l = 0; l < q; ++l) {
        const Felt c{l};
        check(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        check(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        check(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  check(f.zero() != f.one());
  return audit;
}

}  // namespace kakeya
