#pragma once
// Arbitrary-precision integers and exact rationals, plus the square-class
// predicates used by every discriminant condition.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubegal {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt parse_bigint(std::string_view text)
{
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty integer literal");
    s = s.substr(first, last - first + 1);
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("malformed integer literal: " + s);
    if (s[0] == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

inline std::string to_string(const BigInt& n) { return n.get_str(10); }

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "num/den" or "num" (decimal, optional sign on the numerator).
    static BigRational parse(std::string_view text)
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return BigRational(parse_bigint(text));
        return BigRational(parse_bigint(text.substr(0, slash)),
                           parse_bigint(text.substr(slash + 1)));
    }

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const
    {
        if (is_integer())
            return value_.get_num().get_str(10);
        return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
    }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o)
    {
        if (o.is_zero())
            throw std::domain_error("division by zero rational");
        value_ /= o.value_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a)
    {
        BigRational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    BigRational pow(long e) const
    {
        if (e < 0)
            return BigRational(1) / pow(-e);
        return BigRational(big_pow(num(), static_cast<unsigned long>(e)),
                           big_pow(den(), static_cast<unsigned long>(e)));
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

struct SqrtResult {
    BigInt root;
    bool exact;
};

/// floor(sqrt(n)) together with whether n is a perfect square.
inline SqrtResult integer_sqrt(const BigInt& n)
{
    if (n < 0)
        throw std::domain_error("integer_sqrt of a negative number");
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    return {root, rem == 0};
}

/// True iff a = b^2 for some rational b. Never factors anything.
inline bool is_square(const BigRational& a)
{
    if (a.sign() < 0)
        return false;
    if (a.is_zero())
        return true;
    return integer_sqrt(a.num()).exact && integer_sqrt(a.den()).exact;
}

/// a == b in Q^x / (Q^x)^2, i.e. a*b is a rational square.
inline bool square_class_equal(const BigRational& a, const BigRational& b)
{
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("square classes are defined for nonzero rationals only");
    return is_square(a * b);
}

/// Expands a product of prime powers, e.g. {{2,67},{3,24}}.
inline BigInt factored_constant(const std::vector<std::pair<BigInt, unsigned>>& factors)
{
    BigInt r = 1;
    for (const auto& [prime, exp] : factors) {
        if (prime <= 0)
            throw std::invalid_argument("factored_constant: bases must be positive");
        r *= big_pow(prime, exp);
    }
    return r;
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    BigRational parse()
    {
        skip();
        BigRational v = quotient();
        skip();
        if (pos_ != s_.size())
            fail("trailing characters");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("malformed rational expression '" + std::string(s_) +
                                    "': " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // quotient := ['-'|'+'] product ['/' product]
    BigRational quotient()
    {
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        BigRational v = product();
        if (eat('/')) {
            BigRational d = product();
            if (d.is_zero())
                fail("zero denominator");
            v /= d;
        }
        return negative ? -v : v;
    }

    // product := power (('*' | '.') power)*
    BigRational product()
    {
        BigRational v = power();
        while (true) {
            if (eat('*') || eat('.'))
                v *= power();
            else
                return v;
        }
    }

    // power := atom ['^' digits]
    BigRational power()
    {
        BigRational base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("missing exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            return base.pow(static_cast<long>(e));
        }
        return base;
    }

    BigRational atom()
    {
        if (eat('(')) {
            BigRational v = quotient();
            if (!eat(')'))
                fail("missing ')'");
            return v;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return BigRational(BigInt(std::string(s_.substr(start, pos_ - start)), 10));
    }
};

}  // namespace detail

/// Parses a coefficient written either expanded ("-12/7") or in factored
/// form ("2^67*3^24/(23^23*31*281)"). Accepts '*' or '.' as product sign.
inline BigRational parse_rational_expr(std::string_view text)
{
    return detail::ExprParser(text).parse();
}

}  // namespace cubegal
