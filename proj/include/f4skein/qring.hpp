#pragma once
/**
 * @file qring.hpp
 * @brief Exact arithmetic in Q(q): Laurent polynomials and their fractions.
 */

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace f4skein {

namespace detail {

using Coeffs = std::vector<mpq_class>;

inline void trim_high(Coeffs& a) {
    while (!a.empty() && sgn(a.back()) == 0)
        a.pop_back();
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty())
        return {};
    Coeffs r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim_high(r);
    return r;
}

// a = quot * b + rem, b nonzero
inline void poly_divmod(const Coeffs& a, const Coeffs& b, Coeffs& quot, Coeffs& rem) {
    rem = a;
    trim_high(rem);
    quot.clear();
    if (rem.size() < b.size())
        return;
    quot.assign(rem.size() - b.size() + 1, mpq_class(0));
    const mpq_class& lead = b.back();
    for (std::size_t k = rem.size(); k-- >= b.size();) {
        if (sgn(rem[k]) == 0)
            continue;
        mpq_class f = rem[k] / lead;
        std::size_t shift = k - (b.size() - 1);
        quot[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[shift + j] -= f * b[j];
    }
    trim_high(rem);
    trim_high(quot);
}

inline void make_monic(Coeffs& a) {
    if (a.empty())
        return;
    mpq_class lead = a.back();
    for (auto& c : a)
        c /= lead;
}

inline Coeffs poly_gcd(Coeffs a, Coeffs b) {
    trim_high(a);
    trim_high(b);
    Coeffs q, r;
    while (!b.empty()) {
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

inline Coeffs poly_exact_div(const Coeffs& a, const Coeffs& b) {
    Coeffs q, r;
    poly_divmod(a, b, q, r);
    return q;
}

} // namespace detail

/// Finite sum of c_k q^k with rational c_k.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long v) : low_(0) {
        if (v != 0)
            c_.emplace_back(v);
    }
    LaurentPoly(const mpq_class& v) : low_(0) {
        if (sgn(v) != 0)
            c_.push_back(v);
    }
    LaurentPoly(int low, detail::Coeffs coeffs) : low_(low), c_(std::move(coeffs)) { normalize(); }

    static LaurentPoly monomial(const mpq_class& c, int e) { return LaurentPoly(e, detail::Coeffs{c}); }
    static LaurentPoly q(int e = 1) { return monomial(mpq_class(1), e); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    const detail::Coeffs& coeffs() const { return c_; }

    mpq_class coeff(int e) const {
        if (is_zero() || e < low_ || e > high())
            return 0;
        return c_[static_cast<std::size_t>(e - low_)];
    }

    bool is_constant() const { return is_zero() || (low_ == 0 && c_.size() == 1); }
    bool is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }

    LaurentPoly shifted(int k) const {
        LaurentPoly r = *this;
        if (!r.is_zero())
            r.low_ += k;
        return r;
    }

    /// Substitution q -> q^-1.
    LaurentPoly bar() const {
        if (is_zero())
            return {};
        detail::Coeffs r(c_.rbegin(), c_.rend());
        return LaurentPoly(-high(), std::move(r));
    }

    bool has_natural_coeffs() const {
        for (const auto& c : c_)
            if (sgn(c) < 0 || c.get_den() != 1)
                return false;
        return true;
    }

    mpq_class eval(const mpq_class& x) const {
        if (is_zero())
            return 0;
        if (sgn(x) == 0) {
            if (low_ < 0)
                throw PoleAtPoint("Laurent polynomial has a pole at q=0");
            return low_ == 0 ? c_[0] : mpq_class(0);
        }
        mpq_class acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc * pow_q(x, low_);
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        int lo = std::min(a.low_, b.low_);
        int hi = std::max(a.high(), b.high());
        detail::Coeffs r(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[static_cast<std::size_t>(a.low_ - lo) + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[static_cast<std::size_t>(b.low_ - lo) + i] += b.c_[i];
        return LaurentPoly(lo, std::move(r));
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        return LaurentPoly(a.low_ + b.low_, detail::poly_mul(a.c_, b.c_));
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const mpq_class& c = c_[i];
            if (sgn(c) == 0)
                continue;
            int e = low_ + static_cast<int>(i);
            bool neg = sgn(c) < 0;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            mpq_class a = abs(c);
            if (e == 0) {
                out += a.get_str();
                continue;
            }
            if (a != 1)
                out += a.get_str() + "*";
            out += e == 1 ? std::string("q") : "q^" + std::to_string(e);
        }
        return out;
    }

  private:
    static mpq_class pow_q(const mpq_class& x, int e) {
        mpq_class r = 1, b = e < 0 ? mpq_class(1 / x) : x;
        for (unsigned k = static_cast<unsigned>(e < 0 ? -e : e); k; k >>= 1, b *= b)
            if (k & 1u)
                r *= b;
        return r;
    }

    void normalize() {
        detail::trim_high(c_);
        std::size_t z = 0;
        while (z < c_.size() && sgn(c_[z]) == 0)
            ++z;
        if (z == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        if (z) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
            low_ += static_cast<int>(z);
        }
    }

    int low_ = 0;
    detail::Coeffs c_;
};

/**
 * Element of Q(q) kept as num/den with den a polynomial of lowest degree 0,
 * lowest coefficient 1, and coprime to num. Equality is structural.
 */
class ScalarQ {
  public:
    ScalarQ() : num_(), den_(1) {}
    ScalarQ(long v) : num_(v), den_(1) {}
    ScalarQ(const mpq_class& v) : num_(v), den_(1) {}
    ScalarQ(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    ScalarQ(const LaurentPoly& n, const LaurentPoly& d) { assign(n, d); }

    static ScalarQ q(int e = 1) { return ScalarQ(LaurentPoly::q(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }

    ScalarQ bar() const { return ScalarQ(num_.bar(), den_.bar()); }

    mpq_class specialize(const mpq_class& x) const {
        mpq_class d = den_.eval(x);
        if (sgn(d) == 0)
            throw PoleAtPoint("scalar has a pole at q=" + x.get_str());
        return num_.eval(x) / d;
    }

    ScalarQ operator-() const {
        ScalarQ r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend ScalarQ operator+(const ScalarQ& a, const ScalarQ& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.den_ == b.den_) {
            if (a.is_laurent())
                return ScalarQ(a.num_ + b.num_);
            return ScalarQ(a.num_ + b.num_, a.den_);
        }
        return ScalarQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarQ operator-(const ScalarQ& a, const ScalarQ& b) { return a + (-b); }
    friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        if (a.is_laurent() && b.is_laurent())
            return ScalarQ(a.num_ * b.num_);
        return ScalarQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ScalarQ operator/(const ScalarQ& a, const ScalarQ& b) {
        if (b.is_zero())
            throw DivisionByZero("division by zero in Q(q)");
        return ScalarQ(a.num_ * b.den_, a.den_ * b.num_);
    }
    ScalarQ& operator+=(const ScalarQ& b) { return *this = *this + b; }
    ScalarQ& operator-=(const ScalarQ& b) { return *this = *this - b; }
    ScalarQ& operator*=(const ScalarQ& b) { return *this = *this * b; }
    ScalarQ& operator/=(const ScalarQ& b) { return *this = *this / b; }

    ScalarQ pow(int e) const {
        ScalarQ base = e < 0 ? ScalarQ(1) / *this : *this;
        ScalarQ r(1);
        for (unsigned k = static_cast<unsigned>(e < 0 ? -e : e); k; k >>= 1, base = base * base)
            if (k & 1u)
                r = r * base;
        return r;
    }

    friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const {
        if (is_laurent())
            return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    static ScalarQ parse(std::string_view text);

  private:
    void assign(const LaurentPoly& n, const LaurentPoly& d) {
        if (d.is_zero())
            throw DivisionByZero("zero denominator in Q(q)");
        if (n.is_zero()) {
            num_ = LaurentPoly();
            den_ = LaurentPoly(1);
            return;
        }
        int shift = n.low() - d.low();
        detail::Coeffs pn = n.coeffs(), pd = d.coeffs();
        if (pd.size() > 1 && pn.size() > 1) {
            detail::Coeffs g = detail::poly_gcd(pn, pd);
            if (g.size() > 1) {
                pn = detail::poly_exact_div(pn, g);
                pd = detail::poly_exact_div(pd, g);
            }
        }
        mpq_class c = pd[0];
        if (c != 1) {
            for (auto& x : pn)
                x /= c;
            for (auto& x : pd)
                x /= c;
        }
        num_ = LaurentPoly(shift, std::move(pn));
        den_ = LaurentPoly(0, std::move(pd));
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const ScalarQ& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << x.to_string(); }

inline ScalarQ bar(const ScalarQ& x) { return x.bar(); }

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1).
inline ScalarQ qint(int n) {
    int a = n < 0 ? -n : n;
    LaurentPoly r;
    for (int k = -(a - 1); k <= a - 1; k += 2)
        r += LaurentPoly::q(k);
    return n < 0 ? ScalarQ(-r) : ScalarQ(r);
}

inline ScalarQ loop_value() { return qint(3) * qint(8) * qint(13) * qint(18) / (qint(4) * qint(6) * qint(9)); }
inline ScalarQ bigon_value() { return qint(2) * qint(7) * qint(12) / (qint(4) * qint(6)); }
inline ScalarQ triangle_value() { return -qint(9) / qint(3); }
inline ScalarQ zparam() { return (ScalarQ::q(-4) - ScalarQ::q(4)) / qint(3); }
inline ScalarQ twist_value() { return ScalarQ::q(12); }
inline ScalarQ kink_value() { return ScalarQ::q(24); }

namespace detail {

class ScalarParser {
  public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    ScalarQ run() {
        ScalarQ v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
            skip();
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        if (pos_ - start > 9)
            fail("integer too large");
        long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    ScalarQ expr() {
        ScalarQ v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    ScalarQ term() {
        ScalarQ v = unary();
        for (;;) {
            if (eat('*'))
                v *= unary();
            else if (eat('/'))
                v /= unary();
            else
                return v;
        }
    }
    ScalarQ unary() {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }
    ScalarQ power() {
        ScalarQ base = primary();
        if (eat('^')) {
            long e;
            if (eat('(')) {
                e = integer();
                if (!eat(')'))
                    fail("expected ')'");
            } else {
                e = integer();
            }
            return base.pow(static_cast<int>(e));
        }
        return base;
    }
    ScalarQ primary() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ScalarQ v = expr();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (c == '[') {
            ++pos_;
            long n = integer();
            if (!eat(']'))
                fail("expected ']'");
            return qint(static_cast<int>(n));
        }
        if (c == 'q') {
            ++pos_;
            return ScalarQ::q(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return ScalarQ(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Accepts integers, q, [n], + - * / ^ and parentheses; inverse of to_string.
inline ScalarQ ScalarQ::parse(std::string_view text) { return detail::ScalarParser(text).run(); }

} // namespace f4skein
