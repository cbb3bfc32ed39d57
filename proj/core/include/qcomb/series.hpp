#pragma once

#include <vector>

#include "qcomb/rational.hpp"

namespace qcomb {

// Truncated power series with exact rational coefficients and an explicit
// truncation order: coefficients of z^0 .. z^order are meaningful, nothing
// beyond is ever reported. Arithmetic follows the usual truncation calculus:
// combining series of orders p and q yields order min(p,q).
class Series {
  public:
    explicit Series(int order);
    static Series constant(const Rat& c, int order);
    static Series x(int order);  // the series z, to the given order

    int order() const { return order_; }
    const Rat& coeff(int i) const;
    void set(int i, const Rat& v);

    Series truncated(int new_order) const;  // new_order <= order
    Series shifted(int k) const;            // multiply by z^k, same order

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    // Requires b constant term nonzero.
    friend Series operator/(const Series& a, const Series& b);
    friend Series operator*(const Rat& c, Series s);
    friend bool operator==(const Series& a, const Series& b);

    // a(b(z)); requires inner constant term zero.
    Series compose(const Series& inner) const;
    // exp of a series with constant term zero.
    Series exp() const;
    // log of a series with constant term one.
    Series log() const;

  private:
    int order_;
    std::vector<Rat> c_;  // size order_+1
};

// Truncated bivariate power series in (z, u) with exact rational
// coefficients; truncation orders are tracked per variable.
class BiSeries {
  public:
    BiSeries(int order1, int order2);

    int order1() const { return ord1_; }
    int order2() const { return ord2_; }
    const Rat& coeff(int i, int j) const { return m_[idx(i, j)]; }
    void set(int i, int j, const Rat& v) { m_[idx(i, j)] = v; }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend bool operator==(const BiSeries& a, const BiSeries& b);

  private:
    std::size_t idx(int i, int j) const;
    int ord1_, ord2_;
    std::vector<Rat> m_;
};

}  // namespace qcomb
