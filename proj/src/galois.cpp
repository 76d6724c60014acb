#include "plotkin/galois.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace plotkin {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

bool is_prime_number(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Digits of x in base Q, m of them.
std::vector<Elem> digits(Elem x, std::uint32_t Q, int m) {
    std::vector<Elem> d(m);
    for (int i = 0; i < m; ++i) {
        d[i] = x % Q;
        x /= Q;
    }
    return d;
}

Elem undigits(const std::vector<Elem>& d, std::uint32_t Q) {
    Elem x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * Q + d[i];
    return x;
}

// Multiplication of encoded elements of GF(Q^m) = base[x]/(modulus) before
// log tables exist.
struct SlowMul {
    const Field* base = nullptr;  // null for prime fields
    int p = 0;
    int m = 1;
    std::uint32_t Q = 0;
    const std::vector<Elem>* modulus = nullptr;

    Elem operator()(Elem a, Elem b) const {
        if (!base) return static_cast<Elem>((std::uint64_t{a} * b) % p);
        auto da = digits(a, Q, m);
        auto db = digits(b, Q, m);
        std::vector<Elem> r(2 * m - 1, 0);
        for (int i = 0; i < m; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < m; ++j) r[i + j] = base->add(r[i + j], base->mul(da[i], db[j]));
        }
        for (int i = 2 * m - 2; i >= m; --i) {
            Elem c = r[i];
            if (c == 0) continue;
            r[i] = 0;
            for (int j = 0; j < m; ++j)
                r[i - m + j] = base->sub(r[i - m + j], base->mul(c, (*modulus)[j]));
        }
        r.resize(m);
        return undigits(r, Q);
    }

    Elem pow(Elem a, std::uint64_t k) const {
        Elem r = 1;
        while (k) {
            if (k & 1) r = (*this)(r, a);
            a = (*this)(a, a);
            k >>= 1;
        }
        return r;
    }
};

std::optional<std::vector<Elem>> canonical_modulus(int p, int e) {
    if (p == 2 && e == 2) return std::vector<Elem>{1, 1, 1};
    if (p == 2 && e == 3) return std::vector<Elem>{1, 1, 0, 1};
    if (p == 3 && e == 2) return std::vector<Elem>{2, 2, 1};
    return std::nullopt;
}

std::vector<Elem> smallest_irreducible(const FieldPtr& base, int m) {
    const std::uint32_t Q = base->order();
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= Q;
    for (std::uint64_t t = 0; t < count; ++t) {
        std::vector<Elem> c(m + 1);
        std::uint64_t v = t;
        for (int i = 0; i < m; ++i) {
            c[i] = static_cast<Elem>(v % Q);
            v /= Q;
        }
        c[m] = 1;
        if (m > 1 && c[0] == 0) continue;
        if (is_irreducible(Poly(base, c))) return c;
    }
    throw FieldError("no irreducible polynomial found");
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint32_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || gcd_u64(q, n) != 1) throw FieldError("multiplicative order needs gcd(q, n) = 1");
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    std::uint32_t k = 1;
    while (x != 1) {
        x = (x * q) % n;
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::prime_power(int p, int e, std::optional<std::vector<Elem>> modulus) {
    if (!is_prime_number(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw FieldError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxOrder) throw FieldError("field order exceeds 2^16");
    }
    if (e == 1) {
        if (modulus && !modulus->empty())
            throw FieldError("prime field takes no modulus");
        auto f = std::shared_ptr<Field>(new Field());
        f->p_ = p;
        f->e_ = 1;
        f->m_ = 1;
        f->q_ = static_cast<std::uint32_t>(q);
        f->build_tables();
        return f;
    }
    auto base = prime_power(p, 1);
    if (!modulus) modulus = canonical_modulus(p, e);
    return extension(base, e, std::move(modulus));
}

FieldPtr Field::extension(const FieldPtr& base, int m, std::optional<std::vector<Elem>> modulus) {
    if (!base) throw FieldError("extension of a null field");
    if (m < 1) throw FieldError("extension degree must be >= 1");
    if (m == 1 && !modulus) return base;
    if (base->is_prime() && !modulus) {
        if (auto canon = canonical_modulus(base->characteristic(), m)) modulus = canon;
    }
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= base->order();
        if (q > kMaxOrder) throw FieldError("field order exceeds 2^16");
    }
    std::vector<Elem> mod;
    if (modulus) {
        mod = *modulus;
        if (static_cast<int>(mod.size()) != m + 1 || mod.back() != 1)
            throw FieldError("modulus must be monic of degree " + std::to_string(m));
        for (Elem c : mod)
            if (!base->contains(c)) throw FieldError("modulus coefficient outside the base field");
        if (!is_irreducible(Poly(base, mod))) throw FieldError("modulus is reducible");
    } else {
        mod = smallest_irreducible(base, m);
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = base->characteristic();
    f->e_ = base->prime_degree() * m;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);
    f->base_ = base;
    f->modulus_ = std::move(mod);
    f->build_tables();
    return f;
}

FieldPtr Field::of_order(std::uint32_t q) {
    if (q < 2) throw FieldError("field order must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw FieldError(std::to_string(q) + " is not a prime power");
    return prime_power(static_cast<int>(p), e);
}

void Field::build_tables() {
    neg_.resize(q_);
    if (!base_) {
        for (Elem x = 0; x < q_; ++x) neg_[x] = (q_ - x) % q_;
    } else {
        const std::uint32_t Q = base_->order();
        for (Elem x = 0; x < q_; ++x) {
            auto d = digits(x, Q, m_);
            for (auto& c : d) c = base_->neg(c);
            neg_[x] = undigits(d, Q);
        }
    }
    if (p_ != 2 && q_ <= 1024) {
        add_table_.resize(std::size_t{q_} * q_);
        for (Elem x = 0; x < q_; ++x)
            for (Elem y = 0; y < q_; ++y) add_table_[std::size_t{x} * q_ + y] = add_slow(x, y);
    }

    SlowMul smul{base_.get(), p_, m_, base_ ? base_->order() : 0, &modulus_};
    const std::uint64_t n = q_ - 1;
    const auto factors = prime_factors(n);
    Elem gen = 0;
    for (Elem g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto r : factors)
            if (smul.pow(g, n / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0) throw FieldError("no primitive element: modulus is not irreducible");
    exp_.assign(n, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = smul(x, gen);
    }
    if (x != 1) throw FieldError("exp table does not cycle");
}

Elem Field::add_slow(Elem x, Elem y) const {
    if (!base_) return (x + y) % q_;
    const std::uint32_t Q = base_->order();
    Elem r = 0, scale = 1;
    for (int i = 0; i < m_; ++i) {
        r += base_->add(x % Q, y % Q) * scale;
        x /= Q;
        y /= Q;
        scale *= Q;
    }
    return r;
}

Elem Field::add(Elem x, Elem y) const {
    if (p_ == 2) return x ^ y;
    if (!add_table_.empty()) return add_table_[std::size_t{x} * q_ + y];
    return add_slow(x, y);
}

Elem Field::neg(Elem x) const { return neg_[x]; }

Elem Field::inv(Elem x) const {
    if (x == 0) throw FieldError("inverse of zero");
    return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

Elem Field::pow(Elem x, std::uint64_t k) const {
    if (k == 0) return 1;
    if (x == 0) return 0;
    return exp_[(std::uint64_t{log_[x]} * (k % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::log(Elem x) const {
    if (x == 0) throw FieldError("log of zero");
    return log_[x];
}

Elem Field::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

bool Field::same_as(const Field& other) const {
    if (this == &other) return true;
    if (q_ != other.q_ || p_ != other.p_ || m_ != other.m_ || modulus_ != other.modulus_) return false;
    if (!base_ || !other.base_) return !base_ && !other.base_;
    return base_->same_as(*other.base_);
}

std::string Field::name() const {
    if (!base_ || base_->is_prime()) return "GF(" + std::to_string(q_) + ")";
    return "GF(" + std::to_string(base_->order()) + "^" + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw FieldError("polynomial without a field");
    for (Elem c : c_)
        if (!field_->contains(c)) throw FieldError("coefficient outside the field");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x_power(FieldPtr field, std::size_t k) {
    std::vector<Elem> c(k + 1, 0);
    c[k] = 1;
    return Poly(std::move(field), std::move(c));
}

Poly Poly::x_n_minus_one(FieldPtr field, std::size_t n) {
    std::vector<Elem> c(n + 1, 0);
    c[n] = 1;
    c[0] = field->add(c[0], field->neg(1));
    return Poly(std::move(field), std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
}

Elem Poly::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& F = *a.field_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    const auto& F = *a.field_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
    const auto& F = *a.field_;
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(c));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_->mul(c_[i], s);
    return Poly(field_, std::move(c));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> c(k, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw FieldError("polynomial division by zero");
    const auto& F = *n.field();
    std::vector<Elem> r = n.coeffs();
    const auto& dc = d.coeffs();
    const int dd = d.degree();
    if (n.degree() < dd) return {Poly::zero(n.field()), n};
    std::vector<Elem> quo(n.degree() - dd + 1, 0);
    const Elem lead_inv = F.inv(d.lead());
    for (int i = n.degree(); i >= dd; --i) {
        Elem c = r[i];
        if (c == 0) continue;
        Elem t = F.mul(c, lead_inv);
        quo[i - dd] = t;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = F.sub(r[i - dd + j], F.mul(t, dc[j]));
    }
    r.resize(dd);
    return {Poly(n.field(), std::move(quo)), Poly(n.field(), std::move(r))};
}

Poly poly_gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        auto r = poly_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.field());
    return poly_divmod(f * g, poly_gcd(f, g)).first.monic();
}

Poly poly_powmod(const Poly& b, std::uint64_t e, const Poly& m) {
    Poly result = poly_divmod(Poly::one(b.field()), m).second;
    Poly base = poly_divmod(b, m).second;
    while (e) {
        if (e & 1) result = poly_divmod(result * base, m).second;
        base = poly_divmod(base * base, m).second;
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const Poly& f) {
    const int m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    const auto& F = f.field();
    const std::uint64_t Q = F->order();
    const Poly x = Poly::x_power(F, 1);
    // frob[j] = x^(Q^j) mod f
    std::vector<Poly> frob{poly_divmod(x, f).second};
    for (int j = 1; j <= m; ++j) frob.push_back(poly_powmod(frob.back(), Q, f));
    if (!(frob[m] - poly_divmod(x, f).second).is_zero()) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(m))) {
        const Poly h = frob[m / r] - x;
        if (poly_gcd(f, h).degree() != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

struct PolyParser {
    const Field& F;
    std::string s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw FieldError("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }
    bool peek(char c) const { return pos < s.size() && s[pos] == c; }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    std::uint64_t integer() {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned>(s[pos] - '0');
            if (v > (1ull << 40)) fail("integer too large");
            ++pos;
        }
        return v;
    }
    // term ::= coefficient '*'? monomial | coefficient | monomial
    std::pair<Elem, std::size_t> term() {
        Elem coef = 1;
        bool have_coef = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            auto v = integer();
            if (v >= F.order()) fail("coefficient " + std::to_string(v) + " is not an element of " + F.name());
            coef = static_cast<Elem>(v);
            have_coef = true;
        } else if (eat('a')) {
            std::uint64_t k = 1;
            if (eat('^')) k = integer();
            coef = F.pow(F.primitive(), k);
            have_coef = true;
        }
        if (have_coef) eat('*');
        std::size_t deg = 0;
        if (eat('x')) {
            deg = 1;
            if (eat('^')) deg = integer();
        } else if (!have_coef) {
            fail("expected a term");
        }
        return {coef, deg};
    }
};

}  // namespace

Poly Poly::parse(FieldPtr field, std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    PolyParser ps{*field, compact};
    if (compact.empty()) ps.fail("empty polynomial");
    std::vector<Elem> c;
    do {
        auto [coef, deg] = ps.term();
        if (deg > 1u << 16) ps.fail("degree too large");
        if (c.size() <= deg) c.resize(deg + 1, 0);
        c[deg] = field->add(c[deg], coef);
    } while (ps.eat('+'));
    if (ps.pos != compact.size()) ps.fail("unexpected character");
    return Poly(std::move(field), std::move(c));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Elem c = c_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string coef;
        if (c < static_cast<Elem>(field_->characteristic())) {
            coef = std::to_string(c);
        } else {
            const auto k = field_->log(c);
            coef = k == 1 ? "a" : "a^" + std::to_string(k);
        }
        if (i == 0) {
            os << coef;
            continue;
        }
        if (c != 1) os << coef << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Cyclotomic cosets and minimal polynomials

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t n, std::uint32_t q, std::uint32_t i) {
    if (n == 0 || gcd_u64(n, q) != 1) throw FieldError("cyclotomic coset needs gcd(n, q) = 1");
    if (i >= n) throw FieldError("coset representative out of range");
    std::set<std::uint32_t> orbit;
    std::uint64_t x = i;
    while (orbit.insert(static_cast<std::uint32_t>(x)).second) x = (x * q) % n;
    return {orbit.begin(), orbit.end()};
}

Poly lift(const Poly& f, const FieldPtr& ext) {
    return Poly(ext, f.coeffs());
}

Poly minimal_polynomial(const FieldPtr& base, const FieldPtr& ext, std::uint64_t exponent) {
    if (!ext->base() || !ext->base()->same_as(*base)) {
        if (!ext->same_as(*base)) throw FieldError(ext->name() + " is not an extension of " + base->name());
    }
    const std::uint64_t n = ext->order() - 1;
    const std::uint64_t Q = base->order();
    std::set<std::uint64_t> exps;
    std::uint64_t e = exponent % n;
    while (exps.insert(e).second) e = (e * Q) % n;

    Poly acc = Poly::one(ext);
    for (auto k : exps) acc = acc * Poly(ext, {ext->neg(ext->exp(k)), 1});
    for (Elem c : acc.coeffs())
        if (!base->contains(c)) throw FieldError("minimal polynomial escaped the base field");
    return Poly(base, acc.coeffs());
}

}  // namespace plotkin
