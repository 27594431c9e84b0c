#include "blowup/field.hpp"

namespace blowup {

bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(long long p) {
    if (p < 2 || p >= (1LL << 31) || !is_prime_u64(static_cast<unsigned long long>(p)))
        throw std::invalid_argument("field characteristic must be a prime < 2^31, got " +
                                    std::to_string(p));
    return Field(Kind::prime, p);
}

Scalar Field::zero() const {
    if (kind_ == Kind::prime) return Scalar(0LL);
    return Scalar(mpq_class(0));
}

Scalar Field::one() const {
    if (kind_ == Kind::prime) return Scalar(1LL);
    return Scalar(mpq_class(1));
}

Scalar Field::from_int(long long n) const {
    if (kind_ == Kind::prime) {
        long long r = n % p_;
        if (r < 0) r += p_;
        return Scalar(r);
    }
    return Scalar(mpq_class(static_cast<long>(n)));
}

Scalar Field::from_integer_string(const std::string& digits) const {
    mpz_class z(digits, 10);
    if (kind_ == Kind::prime) {
        mpz_class r = z % mpz_class(static_cast<long>(p_));
        long long v = r.get_si();
        if (v < 0) v += p_;
        return Scalar(v);
    }
    return Scalar(mpq_class(z));
}

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == Kind::prime) return residue(a) == 0;
    return rat(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (kind_ == Kind::prime) return residue(a) == 1;
    return rat(a) == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) return residue(a) == residue(b);
    return rat(a) == rat(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        long long s = residue(a) + residue(b);
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    return Scalar(mpq_class(rat(a) + rat(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        long long s = residue(a) - residue(b);
        if (s < 0) s += p_;
        return Scalar(s);
    }
    return Scalar(mpq_class(rat(a) - rat(b)));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::prime) {
        long long v = residue(a);
        return Scalar(v == 0 ? 0 : p_ - v);
    }
    return Scalar(mpq_class(-rat(a)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
        // p < 2^31, so the product fits in a signed 64-bit word.
        return Scalar((residue(a) * residue(b)) % p_);
    }
    return Scalar(mpq_class(rat(a) * rat(b)));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in coefficient field");
    if (kind_ == Kind::prime) {
        // extended Euclid
        long long t = 0, newt = 1, r = p_, newr = residue(a);
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return Scalar(t);
    }
    return Scalar(mpq_class(1 / rat(a)));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::str(const Scalar& a) const {
    if (kind_ == Kind::prime) return std::to_string(residue(a));
    return rat(a).get_str();
}

std::string Field::describe() const {
    if (kind_ == Kind::prime) return "gf:" + std::to_string(p_);
    return "qq";
}

}  // namespace blowup
