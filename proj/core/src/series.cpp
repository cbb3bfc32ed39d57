#include "qcomb/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcomb {

Series::Series(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    c_.resize(order + 1);
}

Series Series::constant(const Rat& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::x(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = Rat(1);
    return s;
}

const Rat& Series::coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("Series::coeff: beyond truncation order");
    return c_[i];
}

void Series::set(int i, const Rat& v) {
    if (i < 0 || i > order_) throw std::out_of_range("Series::set: beyond truncation order");
    c_[i] = v;
}

Series Series::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("Series::truncated: cannot extend order");
    Series s(new_order);
    for (int i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
    return s;
}

Series Series::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("Series::shifted: negative shift");
    Series s(order_);
    for (int i = order_; i >= k; --i) s.c_[i] = c_[i - k];
    return s;
}

Series operator+(const Series& a, const Series& b) {
    Series s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

Series operator-(const Series& a, const Series& b) {
    Series s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
}

Series operator*(const Series& a, const Series& b) {
    Series s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= s.order_; ++j) {
            if (b.c_[j].is_zero()) continue;
            s.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return s;
}

Series operator/(const Series& a, const Series& b) {
    if (b.c_[0].is_zero())
        throw std::invalid_argument("Series division: divisor has zero constant term");
    Series s(std::min(a.order_, b.order_));
    for (int n = 0; n <= s.order_; ++n) {
        Rat acc = a.c_[n];
        for (int i = 0; i < n; ++i) {
            if (!s.c_[i].is_zero() && !b.c_[n - i].is_zero()) acc -= s.c_[i] * b.c_[n - i];
        }
        s.c_[n] = acc / b.c_[0];
    }
    return s;
}

Series operator*(const Rat& c, Series s) {
    for (auto& v : s.c_) v *= c;
    return s;
}

bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

Series Series::compose(const Series& inner) const {
    if (!inner.c_[0].is_zero())
        throw std::invalid_argument(
            "Series composition: inner series has nonzero constant term");
    int ord = std::min(order_, inner.order_);
    Series inner_t = inner.truncated(ord);
    Series r = Series::constant(c_[order_], ord);
    for (int i = order_ - 1; i >= 0; --i) {
        r = r * inner_t;
        r.c_[0] += c_[i];
    }
    return r;
}

Series Series::exp() const {
    if (!c_[0].is_zero())
        throw std::invalid_argument("Series exp: argument has nonzero constant term");
    Series e(order_);
    e.c_[0] = Rat(1);
    for (int n = 1; n <= order_; ++n) {
        Rat acc;
        for (int k = 1; k <= n; ++k) {
            if (!c_[k].is_zero() && !e.c_[n - k].is_zero())
                acc += Rat(k) * c_[k] * e.c_[n - k];
        }
        e.c_[n] = acc / Rat(n);
    }
    return e;
}

Series Series::log() const {
    if (c_[0] != Rat(1))
        throw std::invalid_argument("Series log: argument constant term is not one");
    Series l(order_);
    for (int n = 1; n <= order_; ++n) {
        Rat acc = c_[n];
        for (int k = 1; k < n; ++k) {
            if (!l.c_[k].is_zero() && !c_[n - k].is_zero())
                acc -= Rat(k, n) * l.c_[k] * c_[n - k];
        }
        l.c_[n] = acc;
    }
    return l;
}

BiSeries::BiSeries(int order1, int order2) : ord1_(order1), ord2_(order2) {
    if (order1 < 0 || order2 < 0) throw std::invalid_argument("BiSeries: negative order");
    m_.resize(static_cast<std::size_t>(order1 + 1) * (order2 + 1));
}

std::size_t BiSeries::idx(int i, int j) const {
    if (i < 0 || i > ord1_ || j < 0 || j > ord2_)
        throw std::out_of_range("BiSeries: index beyond truncation order");
    return static_cast<std::size_t>(i) * (ord2_ + 1) + j;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries s(std::min(a.ord1_, b.ord1_), std::min(a.ord2_, b.ord2_));
    for (int i = 0; i <= s.ord1_; ++i)
        for (int j = 0; j <= s.ord2_; ++j) s.set(i, j, a.coeff(i, j) + b.coeff(i, j));
    return s;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries s(std::min(a.ord1_, b.ord1_), std::min(a.ord2_, b.ord2_));
    for (int i = 0; i <= s.ord1_; ++i)
        for (int j = 0; j <= s.ord2_; ++j) s.set(i, j, a.coeff(i, j) - b.coeff(i, j));
    return s;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.ord1_ == b.ord1_ && a.ord2_ == b.ord2_ && a.m_ == b.m_;
}

}  // namespace qcomb
