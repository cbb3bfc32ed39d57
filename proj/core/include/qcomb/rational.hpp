#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcomb {

// Arbitrary-precision integer. GMP's mpz_class already provides value
// semantics and exact arithmetic, so it is used directly.
using Int = mpz_class;

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Exact rational number. Invariants: always in lowest terms, denominator > 0.
// Both are maintained by GMP canonicalization on every constructing operation.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    // "num/den", or just "num" for integers.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rat::pow: 0 to negative power");
            return Rat(den(), num()).pow(-e);
        }
        Int n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        Rat r;
        r.v_ = mpq_class(n, d);  // powers of a canonical rational stay canonical
        return r;
    }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace qcomb
