#include "mulhopf/scalar.hpp"

namespace mulhopf {

namespace {

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    while (e) {
        if (e & 1) acc = mod_mul(acc, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return acc;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 31) || !is_small_prime(p))
        throw std::invalid_argument("Field::prime: need a prime p < 2^31, got " + std::to_string(p));
    return Field{FieldKind::prime, p};
}

std::string Field::str() const {
    return kind == FieldKind::rational ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::integer(Field f, long long n) {
    Scalar s(f);
    if (f.kind == FieldKind::rational) {
        s.q_ = BigRational(n);
    } else {
        long long r = n % static_cast<long long>(f.p);
        if (r < 0) r += static_cast<long long>(f.p);
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const BigRational& q) {
    Scalar s(Field::rationals());
    s.q_ = q;
    return s;
}

Scalar Scalar::residue(Field f, std::uint64_t r) {
    if (f.kind != FieldKind::prime)
        throw std::invalid_argument("Scalar::residue: field is not prime");
    Scalar s(f);
    s.r_ = r % f.p;
    return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Scalar::parse: empty string");
    if (f.kind == FieldKind::rational) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                return from_rational(BigRational(boost::multiprecision::cpp_int(text)));
            }
            boost::multiprecision::cpp_int num(text.substr(0, slash));
            boost::multiprecision::cpp_int den(text.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return from_rational(BigRational(num, den));
        } catch (const std::exception&) {
            throw std::invalid_argument("Scalar::parse: bad rational \"" + text + "\"");
        }
    }
    // Prime field: decimal residue, optional sign.
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("Scalar::parse: bad residue \"" + text + "\"");
    std::uint64_t r = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("Scalar::parse: bad residue \"" + text + "\"");
        r = (r * 10 + static_cast<std::uint64_t>(text[i] - '0')) % f.p;
    }
    if (neg && r != 0) r = f.p - r;
    return residue(f, r);
}

bool Scalar::is_zero() const {
    return fld_.kind == FieldKind::rational ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return fld_.kind == FieldKind::rational ? q_ == 1 : r_ == 1 % fld_.p;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(fld_ == o.fld_))
        throw std::invalid_argument("Scalar: mixed fields " + fld_.str() + " and " + o.fld_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(fld_);
    if (fld_.kind == FieldKind::rational) s.q_ = q_ + o.q_;
    else s.r_ = (r_ + o.r_) % fld_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(fld_);
    if (fld_.kind == FieldKind::rational) s.q_ = q_ - o.q_;
    else s.r_ = (r_ + fld_.p - o.r_) % fld_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(fld_);
    if (fld_.kind == FieldKind::rational) s.q_ = q_ * o.q_;
    else s.r_ = mod_mul(r_, o.r_, fld_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(fld_);
    if (fld_.kind == FieldKind::rational) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : fld_.p - r_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return fld_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: zero");
    Scalar s(fld_);
    if (fld_.kind == FieldKind::rational) s.q_ = 1 / q_;
    else s.r_ = mod_pow(r_, fld_.p - 2, fld_.p);
    return s;
}

std::string Scalar::str() const {
    if (fld_.kind == FieldKind::prime) return std::to_string(r_);
    const auto num = boost::multiprecision::numerator(q_);
    const auto den = boost::multiprecision::denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace mulhopf
