#ifndef TROPIQ_FIELD_HPP
#define TROPIQ_FIELD_HPP

#include "tropiq/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropiq {

/// Prime field F_p for a word-sized prime p. Elements are canonical
/// residues in [0, p).
class PrimeField {
  public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p_ ? Elem(s - p_) : Elem(s);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return Elem((std::uint64_t(a) * b) % p_); }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid on signed 64-bit
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += p_;
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_long(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return Elem(r);
    }
    Elem from_int(const Int& v) const {
        Int r = v % p_;
        if (r < 0) r += p_;
        return r.convert_to<Elem>();
    }
    Elem from_rational(const Rational& v) const {
        return div(from_int(rational_num(v)), from_int(rational_den(v)));
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

    /// Representative of smallest magnitude, as (negative?, magnitude).
    std::pair<bool, std::string> signed_repr(Elem a) const {
        if (a > p_ / 2) return {true, std::to_string(p_ - a)};
        return {false, std::to_string(a)};
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint32_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

  private:
    std::uint32_t p_;
};

/// The field of rationals.
class RationalField {
  public:
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return a == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return Rational(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_long(long long v) const { return Rational(v); }
    Elem from_int(const Int& v) const { return Rational(v); }
    Elem from_rational(const Rational& v) const { return v; }

    std::string to_string(const Elem& a) const { return rational_to_string(a); }

    std::pair<bool, std::string> signed_repr(const Elem& a) const {
        if (a < 0) return {true, rational_to_string(-a)};
        return {false, rational_to_string(a)};
    }

    bool operator==(const RationalField&) const { return true; }

  private:
    const Elem& inv_guard(const Elem& b) const {
        if (b == 0) throw std::domain_error("division by zero");
        return b;
    }
};

} // namespace tropiq

#endif
