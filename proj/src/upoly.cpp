#include "puiseux/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "puiseux/errors.hpp"
#include "puiseux/number_theory.hpp"

namespace puiseux {

namespace {

std::string render(const std::vector<BigInt>& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        const bool negative = c[i] < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const BigInt mag = abs(c[i]);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "X";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

bool lex_less(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

// ---------------------------------------------------------------------------
// IntegerPolynomial

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntegerPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::from_dense(const DensePoly& p) {
    if (!p.field.is_rationals()) throw DomainError("integer polynomial needs a polynomial over Q");
    std::vector<BigInt> c;
    c.reserve(p.coeffs.size());
    for (const auto& x : p.coeffs) {
        if (x.get_den() != 1) throw DomainError("non-integer coefficient " + rational_to_string(x));
        c.push_back(x.get_num());
    }
    return IntegerPolynomial(std::move(c));
}

DensePoly IntegerPolynomial::to_dense() const {
    DensePoly d{Field::rationals(), {}};
    for (const auto& x : c_) d.coeffs.emplace_back(x);
    return d;
}

BigInt IntegerPolynomial::content() const {
    BigInt g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    if (lc() < 0) g = -g;
    std::vector<BigInt> c = c_;
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::derivative() const {
    std::vector<BigInt> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.emplace_back(c_[i] * static_cast<unsigned long>(i));
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::scaled(const BigInt& k) const {
    std::vector<BigInt> c = c_;
    for (auto& x : c) x *= k;
    return IntegerPolynomial(std::move(c));
}

BigInt IntegerPolynomial::norm2_squared() const {
    BigInt s = 0;
    for (const auto& x : c_) s += x * x;
    return s;
}

std::string IntegerPolynomial::to_string() const { return render(c_); }

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a + b.scaled(-1); }

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntegerPolynomial(std::move(c));
}

bool operator<(const IntegerPolynomial& a, const IntegerPolynomial& b) { return lex_less(a.c_, b.c_); }

std::optional<IntegerPolynomial> divide_exact(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return IntegerPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigInt> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) return std::nullopt;
        BigInt t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
        q[k] = std::move(t);
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return std::nullopt;
    return IntegerPolynomial(std::move(q));
}

IntegerPolynomial gcd(const IntegerPolynomial& a0, const IntegerPolynomial& b0) {
    IntegerPolynomial a = a0.primitive_part();
    IntegerPolynomial b = b0.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        std::vector<BigInt> r = a.coeffs();
        const auto& bc = b.coeffs();
        const std::size_t db = bc.size() - 1;
        while (r.size() > db && !r.empty()) {
            const BigInt lead = r.back();
            const std::size_t shift = r.size() - 1 - db;
            for (auto& x : r) x *= bc.back();
            for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        a = std::move(b);
        b = IntegerPolynomial(std::move(r)).primitive_part();
    }
    return a.primitive_part();
}

// ---------------------------------------------------------------------------
// ModPolynomial

ModPolynomial::ModPolynomial(BigInt p, std::vector<BigInt> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    if (!is_prime(p_)) throw DomainError("modulus " + p_.get_str() + " is not prime");
    normalize();
}

ModPolynomial::ModPolynomial(BigInt p, std::vector<BigInt> coeffs, bool) : p_(std::move(p)), c_(std::move(coeffs)) {
    normalize();
}

void ModPolynomial::normalize() {
    for (auto& x : c_) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t());
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPolynomial ModPolynomial::from_integer(const BigInt& p, const IntegerPolynomial& f) { return ModPolynomial(p, f.coeffs()); }

ModPolynomial ModPolynomial::from_dense(const DensePoly& f) {
    if (!f.field.is_prime_field()) throw DomainError("mod-p polynomial needs a polynomial over F_p");
    std::vector<BigInt> c;
    for (const auto& x : f.coeffs) c.push_back(rational_mod(x, f.field.modulus()));
    return ModPolynomial(f.field.modulus(), std::move(c), true);
}

DensePoly ModPolynomial::to_dense() const {
    DensePoly d{Field::prime(p_), {}};
    for (const auto& x : c_) d.coeffs.emplace_back(x);
    return d;
}

ModPolynomial ModPolynomial::monomial(const BigInt& p, const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return ModPolynomial(p, std::move(v), true);
}

ModPolynomial ModPolynomial::scaled(const BigInt& k) const {
    std::vector<BigInt> c = c_;
    for (auto& x : c) x *= k;
    return ModPolynomial(p_, std::move(c), true);
}

ModPolynomial ModPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(modular_inverse(lc(), p_));
}

ModPolynomial ModPolynomial::derivative() const {
    std::vector<BigInt> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.emplace_back(c_[i] * static_cast<unsigned long>(i));
    return ModPolynomial(p_, std::move(c), true);
}

IntegerPolynomial ModPolynomial::symmetric_lift() const {
    const BigInt half = p_ / 2;
    std::vector<BigInt> c = c_;
    for (auto& x : c)
        if (x > half) x -= p_;
    return IntegerPolynomial(std::move(c));
}

std::string ModPolynomial::to_string() const { return render(c_); }

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ModPolynomial(a.p_, std::move(c), true);
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return ModPolynomial(a.p_, std::move(c), true);
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ModPolynomial(a.p_, {}, true);
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return ModPolynomial(a.p_, std::move(c), true);
}

bool operator<(const ModPolynomial& a, const ModPolynomial& b) { return lex_less(a.c_, b.c_); }

std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const BigInt& p = a.p_;
    if (a.degree() < b.degree()) return {ModPolynomial(p, {}, true), a};
    std::vector<BigInt> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    const BigInt inv = modular_inverse(b.lc(), p);
    std::vector<BigInt> q(r.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt t = r[k + db] % p;
        if (t == 0) continue;
        t = (t * inv) % p;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_fdiv_r(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), p.get_mpz_t());
        q[k] = std::move(t);
    }
    r.resize(db);
    return {ModPolynomial(p, std::move(q), true), ModPolynomial(p, std::move(r), true)};
}

ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) { return divmod(a, b).second; }

ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
    while (!b.is_zero()) {
        ModPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPolynomial powmod(const ModPolynomial& base, const BigInt& e, const ModPolynomial& m) {
    ModPolynomial result = ModPolynomial::monomial(m.modulus(), 1, 0) % m;
    ModPolynomial b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

} // namespace puiseux
