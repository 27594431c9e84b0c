#ifndef BLOWUP_FIELD_HPP
#define BLOWUP_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace blowup {

// A coefficient: either a residue mod p (stored as a canonical value in
// [0, p)) or an exact rational. The interpretation belongs to a Field; all
// arithmetic goes through Field so mixed-field bugs surface as exceptions
// in debug paths rather than silent junk.
using Scalar = std::variant<long long, mpq_class>;

class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(long long p);

    Kind kind() const { return kind_; }
    long long characteristic() const { return p_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    Scalar from_integer_string(const std::string& digits) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    // Canonical text form: least non-negative residue for prime fields,
    // "a" or "a/b" for rationals.
    std::string str(const Scalar& a) const;

    std::string describe() const;  // "gf:32003" or "qq"

private:
    Field(Kind k, long long p) : kind_(k), p_(p) {}

    long long residue(const Scalar& a) const { return std::get<long long>(a); }
    const mpq_class& rat(const Scalar& a) const { return std::get<mpq_class>(a); }

    Kind kind_;
    long long p_;
};

bool is_prime_u64(unsigned long long n);

}  // namespace blowup

#endif
