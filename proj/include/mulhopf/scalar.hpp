#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mulhopf {

// Exact coefficient fields: the rationals, or F_p for a prime p < 2^31.
enum class FieldKind { rational, prime };

struct Field {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool operator==(const Field&) const = default;
    std::string str() const;
};

using BigRational = boost::multiprecision::cpp_rational;

// One exact field element. Rational values are kept canonically reduced by
// the backend; prime-field values are residues in [0, p).
class Scalar {
public:
    Scalar() = default;                       // rational zero
    explicit Scalar(Field f) : fld_(f) {}     // zero of f

    static Scalar integer(Field f, long long n);
    static Scalar from_rational(const BigRational& q);
    static Scalar residue(Field f, std::uint64_t r);
    // Accepts "n", "-n", "n/d" over Q; decimal residues (negatives allowed)
    // over F_p. Throws std::invalid_argument on malformed input.
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const { return fld_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator*(const Scalar&) const;
    Scalar operator/(const Scalar&) const;    // exact; throws on zero divisor
    Scalar operator-() const;
    bool operator==(const Scalar&) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;                   // throws on zero

    const BigRational& rational_value() const { return q_; }
    std::uint64_t residue_value() const { return r_; }

    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;

    Field fld_{};
    BigRational q_{};        // payload when kind == rational
    std::uint64_t r_ = 0;    // payload when kind == prime
};

}  // namespace mulhopf
