#pragma once

// Finite fields GF(q), q = p^e <= 2^16, and dense polynomials over them.
//
// A field is either a prime field GF(p) or an extension of a smaller field
// (its "base") by a monic irreducible modulus. Elements are integers in
// [0, q): the coordinates c_i of the element sum(c_i * a^i) in the
// polynomial basis, packed as sum(c_i * Q^i) where Q is the base order.
// For fields built directly over GF(p) this is the usual base-p encoding.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plotkin {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct FieldError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Field {
public:
    /// GF(p^e) built over GF(p). When `modulus` is absent and e > 1, the
    /// canonical modulus is used: x^2+x+1 (GF(4)), x^3+x+1 (GF(8)),
    /// x^2+2x+2 (GF(9)), otherwise the monic irreducible of degree e with
    /// the smallest integer encoding. `modulus` is low-degree-first and
    /// must be monic of degree e.
    static FieldPtr prime_power(int p, int e = 1,
                                std::optional<std::vector<Elem>> modulus = std::nullopt);

    /// GF(Q^m) built over `base` (order Q). Over a prime field this is
    /// prime_power(p, m); otherwise the modulus is the monic irreducible of
    /// degree m over `base` with the smallest integer encoding.
    static FieldPtr extension(const FieldPtr& base, int m,
                              std::optional<std::vector<Elem>> modulus = std::nullopt);

    /// The canonical field of order q (prime power, q <= 2^16).
    static FieldPtr of_order(std::uint32_t q);

    std::uint32_t order() const { return q_; }
    int characteristic() const { return p_; }
    /// Degree over the prime field.
    int prime_degree() const { return e_; }
    /// Degree over base() (equals prime_degree() for fields over GF(p)).
    int degree() const { return m_; }
    bool is_prime() const { return !base_; }
    const FieldPtr& base() const { return base_; }
    /// Modulus over base(), low degree first; empty for prime fields.
    const std::vector<Elem>& modulus() const { return modulus_; }

    /// Smallest element of multiplicative order q-1.
    Elem primitive() const { return exp_[1 % exp_.size()]; }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const {
        if (x == 0 || y == 0) return 0;
        std::uint32_t s = log_[x] + log_[y];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::uint64_t k) const;

    /// primitive()^i, i taken mod q-1.
    Elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
    /// Discrete log w.r.t. primitive(); x must be nonzero.
    std::uint32_t log(Elem x) const;

    bool contains(Elem x) const { return x < q_; }
    /// n * 1 in the field.
    Elem from_int(long long n) const;

    bool same_as(const Field& other) const;
    std::string name() const;

private:
    Field() = default;
    void build_tables();
    Elem add_slow(Elem x, Elem y) const;

    int p_ = 0;
    int e_ = 1;
    int m_ = 1;
    std::uint32_t q_ = 0;
    FieldPtr base_;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_table_;  // q*q when q is odd and small
    std::vector<Elem> neg_;
};

/// Dense polynomial over a field, lowest degree first. The zero polynomial
/// has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
    static Poly one(FieldPtr field) { return Poly(std::move(field), {1}); }
    static Poly x_power(FieldPtr field, std::size_t k);
    /// x^n - 1
    static Poly x_n_minus_one(FieldPtr field, std::size_t n);

    /// Parses `1 + a*x + a^2*x^15 + x^21` style text. Coefficients are
    /// element encodings (< q), `a`, or `a^k` with a = field.primitive().
    static Poly parse(FieldPtr field, std::string_view text);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    Elem eval(Elem x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(Elem c) const;
    Poly shifted(std::size_t k) const;  // * x^k

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_ && (a.c_.empty() || a.field_->same_as(*b.field_));
    }

    std::string to_string() const;

private:
    void normalize();
    FieldPtr field_;
    std::vector<Elem> c_;
};

std::pair<Poly, Poly> poly_divmod(const Poly& n, const Poly& d);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly f, Poly g);
/// Monic lcm.
Poly poly_lcm(const Poly& f, const Poly& g);
/// b^e mod m.
Poly poly_powmod(const Poly& b, std::uint64_t e, const Poly& m);

/// Rabin's test over the field of f.
bool is_irreducible(const Poly& f);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Multiplicative order of q modulo n (gcd(q, n) = 1, n >= 1).
std::uint32_t multiplicative_order(std::uint64_t q, std::uint64_t n);

/// The orbit {i * q^j mod n}, sorted ascending.
std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t n, std::uint32_t q, std::uint32_t i);

/// Monic minimal polynomial over `base` of primitive(ext)^exponent. `ext`
/// must be an extension built over `base` (ext.base() is base).
Poly minimal_polynomial(const FieldPtr& base, const FieldPtr& ext, std::uint64_t exponent);

/// Coefficient-wise embedding of a polynomial over ext->base() into ext.
Poly lift(const Poly& f, const FieldPtr& ext);

}  // namespace plotkin
