#include "puiseux/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip_space() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_end() {
        skip_space();
        return i_ == s_.size();
    }
    char peek() {
        skip_space();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        skip_space();
        if (s_.substr(i_, w.size()) != w) return false;
        const std::size_t end = i_ + w.size();
        if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
        i_ = end;
        return true;
    }
    BigInt natural() {
        skip_space();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return BigInt(std::string(s_.substr(start, i_ - start)));
    }
    /// n or n/d, denominator nonzero.
    Rational fraction() {
        const BigInt n = natural();
        if (!accept('/')) return Rational(n);
        const std::size_t at = offset();
        const BigInt d = natural();
        if (d == 0) throw ParseError("zero denominator", at);
        Rational q(n, d);
        q.canonicalize();
        return q;
    }
    std::size_t offset() {
        skip_space();
        return i_;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, offset()); }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

std::vector<BigInt> natural_list(Cursor& c, std::size_t count) {
    std::vector<BigInt> out;
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0) c.expect(',');
        out.push_back(c.natural());
    }
    return out;
}

} // namespace

MonoidSpec parse_monoid(std::string_view text) {
    Cursor c(text);
    MonoidSpec spec = MonoidSpec::qnonneg();
    if (c.accept_word("qplus")) {
    } else if (c.accept_word("fg")) {
        c.expect(':');
        std::vector<ReducedRational> gens;
        if (!c.at_end()) {
            do {
                gens.emplace_back(c.fraction());
            } while (c.accept(','));
        }
        spec = MonoidSpec::finitely_generated(std::move(gens));
    } else if (c.accept_word("pr")) {
        c.expect(':');
        std::vector<ReciprocalPair> pairs;
        bool tail = false;
        if (c.accept_word("tail")) {
            tail = true;
        } else {
            if (c.peek() != ';' && !c.at_end()) {
                do {
                    const BigInt a = c.natural();
                    c.expect('/');
                    pairs.push_back({a, c.natural()});
                } while (c.accept(','));
            }
            if (c.accept(';')) {
                if (!c.accept_word("tail")) c.fail("expected 'tail'");
                tail = true;
            }
        }
        spec = MonoidSpec::prime_reciprocal(std::move(pairs), tail);
    } else if (c.accept_word("ppr")) {
        c.expect(':');
        spec = MonoidSpec::prime_power_reciprocal(c.natural());
    } else if (c.accept_word("biprime")) {
        c.expect(':');
        const auto pq = natural_list(c, 2);
        spec = MonoidSpec::biprime_divisible(pq[0], pq[1]);
    } else if (c.accept_word("powers")) {
        c.expect(':');
        const auto pq = natural_list(c, 2);
        spec = MonoidSpec::prime_power_pair(pq[0], pq[1]);
    } else {
        c.fail("unknown monoid family");
    }
    if (!c.at_end()) c.fail("trailing input");
    return spec;
}

PuiseuxPoly parse_poly(std::string_view text, const Field& field) {
    Cursor c(text);
    std::vector<Term> terms;
    if (c.at_end()) c.fail("empty polynomial");
    bool first = true;
    while (first || !c.at_end()) {
        bool negative = false;
        if (c.accept('-')) {
            negative = true;
        } else if (!first) {
            c.expect('+');
            if (c.accept('-')) negative = true;
        }
        first = false;

        Rational coeff(1);
        bool has_x = false;
        const char head = c.peek();
        if (std::isdigit(static_cast<unsigned char>(head))) {
            coeff = c.fraction();
            if (c.accept('*')) {
                if (!c.accept('X')) c.fail("expected 'X' after '*'");
                has_x = true;
            }
        } else if (c.accept('X')) {
            has_x = true;
        } else {
            c.fail("expected a coefficient or 'X'");
        }

        Rational exponent(0);
        if (has_x) {
            exponent = 1;
            if (c.accept('^')) {
                if (c.accept('(')) {
                    const std::size_t at = c.offset();
                    if (c.peek() == '-') throw ParseError("negative exponent", at);
                    exponent = c.fraction();
                    c.expect(')');
                } else {
                    if (c.peek() == '-') c.fail("negative exponent");
                    exponent = Rational(c.natural());
                }
            }
        }
        if (negative) coeff = -coeff;
        terms.push_back({ReducedRational(exponent), coeff});
    }
    return PuiseuxPoly::canonicalize(std::move(terms), field);
}

} // namespace puiseux
