#include "hypsum/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>
#include <utility>

#include "hypsum/errors.hpp"

namespace hypsum {

Rational::Rational() {
    mpq_init(v_);
}

Rational::Rational(long n) {
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rational::Rational(const Rational& other) {
    mpq_init(v_);
    mpq_set(v_, other.v_);
}

Rational::Rational(Rational&& other) noexcept {
    mpq_init(v_);
    mpq_swap(v_, other.v_);
}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) mpq_set(v_, other.v_);
    return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
    if (this != &other) mpq_swap(v_, other.v_);
    return *this;
}

Rational::~Rational() {
    mpq_clear(v_);
}

Rational Rational::parse(std::string_view text) {
    // Grammar: '-'? digit+ ('/' digit+)?  with a nonzero denominator.
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw DomainError("Rational::parse: expected digits in '" + std::string(text) + "'");
    std::size_t num_end = i;
    std::size_t den_begin = 0, den_end = 0;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) throw DomainError("Rational::parse: expected denominator digits in '" + std::string(text) + "'");
        den_end = i;
    }
    if (i != text.size()) throw DomainError("Rational::parse: trailing characters in '" + std::string(text) + "'");

    Rational r;
    std::string num(text.substr(0, num_end));
    if (mpz_set_str(mpq_numref(r.v_), num.c_str(), 10) != 0)
        throw DomainError("Rational::parse: bad numerator '" + num + "'");
    if (den_end > den_begin) {
        std::string den(text.substr(den_begin, den_end - den_begin));
        if (mpz_set_str(mpq_denref(r.v_), den.c_str(), 10) != 0)
            throw DomainError("Rational::parse: bad denominator '" + den + "'");
        if (mpz_sgn(mpq_denref(r.v_)) == 0)
            throw DomainError("Rational::parse: zero denominator in '" + std::string(text) + "'");
    }
    mpq_canonicalize(r.v_);
    return r;
}

bool Rational::is_zero() const { return mpq_sgn(v_) == 0; }
bool Rational::is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
bool Rational::is_negative() const { return mpq_sgn(v_) < 0; }
bool Rational::is_positive() const { return mpq_sgn(v_) > 0; }
bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

bool Rational::is_nonpositive_integer() const {
    return is_integer() && mpq_sgn(v_) <= 0;
}

bool Rational::fits_long() const {
    return is_integer() && mpz_fits_slong_p(mpq_numref(v_)) != 0;
}

long Rational::to_long() const {
    if (!fits_long()) throw DomainError("Rational::to_long: " + str() + " is not a small integer");
    return mpz_get_si(mpq_numref(v_));
}

long Rational::floor_long() const {
    mpz_t q;
    mpz_init(q);
    mpz_fdiv_q(q, mpq_numref(v_), mpq_denref(v_));
    if (mpz_fits_slong_p(q) == 0) {
        mpz_clear(q);
        throw DomainError("Rational::floor_long: out of range");
    }
    long result = mpz_get_si(q);
    mpz_clear(q);
    return result;
}

long Rational::ceil_long() const {
    mpz_t q;
    mpz_init(q);
    mpz_cdiv_q(q, mpq_numref(v_), mpq_denref(v_));
    if (mpz_fits_slong_p(q) == 0) {
        mpz_clear(q);
        throw DomainError("Rational::ceil_long: out of range");
    }
    long result = mpz_get_si(q);
    mpz_clear(q);
    return result;
}

std::string Rational::str() const {
    char* raw = mpq_get_str(nullptr, 10, v_);
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    mpq_add(v_, v_, rhs.v_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    mpq_sub(v_, v_, rhs.v_);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    mpq_mul(v_, v_, rhs.v_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("Rational: division by zero");
    mpq_div(v_, v_, rhs.v_);
    return *this;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("Rational: division by zero");
    Rational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& a) {
    Rational r;
    mpq_abs(r.v_, a.v_);
    return r;
}

void swap(Rational& a, Rational& b) noexcept {
    mpq_swap(a.v_, b.v_);
}

Rational pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base.is_zero()) {
        if (exp < 0) throw DomainError("pow: zero base with negative exponent");
        return Rational(0);
    }
    // |exp|-th power of numerator and denominator, inverted for exp < 0.
    Rational result(1);
    Rational b = base;
    unsigned long e = exp > 0 ? static_cast<unsigned long>(exp)
                              : static_cast<unsigned long>(-(exp + 1)) + 1;
    while (e > 0) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1UL;
    }
    if (exp < 0) result = Rational(1) / result;
    return result;
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw DomainError("pochhammer: negative length");
    Rational result(1);
    Rational term = a;
    for (long i = 0; i < n; ++i) {
        result *= term;
        if (result.is_zero()) return result;  // product stays zero
        term += Rational(1);
    }
    return result;
}

Rational factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    return pochhammer(Rational(1), n);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace hypsum
