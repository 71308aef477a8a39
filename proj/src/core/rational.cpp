#include "kgap/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>

namespace kgap {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw Error("invalid rational literal '" + std::string(whole) + "'");
    }
    Integer v(std::string(s), 10);
    return negative ? Integer(-v) : v;
}

}  // namespace

Rational::Rational(long long v)
{
    // mpz has no long long constructor on every platform; go through text.
    if (v >= LONG_MIN && v <= LONG_MAX) {
        value_ = static_cast<long>(v);
    } else {
        value_ = mpq_class(mpz_class(std::to_string(v), 10));
    }
}

Rational::Rational(const mpq_class& v) : value_(v)
{
    if (value_.get_den() == 0) {
        throw Error("division by zero");
    }
    value_.canonicalize();
}

Rational Rational::reduce(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw Error("division by zero");
    }
    Rational r;
    r.value_ = mpq_class(num, den);
    r.value_.canonicalize();
    return r;
}

Rational Rational::reduce(long long num, long long den)
{
    return reduce(Rational(num).num(), Rational(den).num());
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    if (s.empty()) {
        throw Error("empty rational literal");
    }
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_integer(s.substr(0, slash), text);
        const std::string_view den_text = s.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw Error("invalid rational literal '" + std::string(text) + "'");
        }
        return reduce(num, Integer(std::string(den_text), 10));
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        const std::string_view frac = s.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac.empty() && !all_digits(frac)) ||
            (int_part.empty() && frac.empty())) {
            throw Error("invalid rational literal '" + std::string(text) + "'");
        }
        const std::string digits = std::string(int_part) + std::string(frac);
        Integer num(digits, 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        return reduce(negative ? Integer(-num) : num, den);
    }
    return Rational(parse_integer(s, text));
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::round() const
{
    return (*this + Rational::reduce(1, 2)).floor();
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw Error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& x)
{
    return x.sign() < 0 ? -x : x;
}

Rational min(const Rational& a, const Rational& b)
{
    return b < a ? b : a;
}

Rational max(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& x)
{
    return os << x.str();
}

std::uint64_t hash_value(const Rational& x)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : x.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace kgap
