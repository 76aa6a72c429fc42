#pragma once

#include "resgraph/error.hpp"
#include "resgraph/numeric.hpp"

#include <vector>

namespace resgraph {

/// Integer coefficient vector over the vertices of a fixed graph: a cycle
/// supported on the exceptional set. Plain value type; the dimension must
/// match the owning graph's vertex count.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::vector<Int> coefficients) : c_(std::move(coefficients)) {}

    static Cycle zero(int n) { return Cycle(std::vector<Int>(n, 0)); }

    static Cycle unit(int n, int j) {
        Cycle c = zero(n);
        c.c_[j] = 1;
        return c;
    }

    int size() const { return static_cast<int>(c_.size()); }
    const Int& operator[](int i) const { return c_[i]; }
    Int& operator[](int i) { return c_[i]; }
    const std::vector<Int>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const Int& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_effective() const {
        for (const Int& x : c_)
            if (x < 0) return false;
        return true;
    }

    /// All coefficients equal to 0 or 1.
    bool is_reduced() const {
        for (const Int& x : c_)
            if (x != 0 && x != 1) return false;
        return true;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < size(); ++i)
            if (c_[i] != 0) s.push_back(i);
        return s;
    }

    Cycle& operator+=(const Cycle& o) {
        check_dim(o);
        for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cycle& operator-=(const Cycle& o) {
        check_dim(o);
        for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
    friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.c_ == b.c_; }

    /// Componentwise partial order: a <= b in every coordinate.
    friend bool dominates(const Cycle& lo, const Cycle& hi) {
        lo.check_dim(hi);
        for (int i = 0; i < lo.size(); ++i)
            if (lo.c_[i] > hi.c_[i]) return false;
        return true;
    }

private:
    void check_dim(const Cycle& o) const {
        if (c_.size() != o.c_.size())
            throw Error(ErrorCode::DimensionMismatch, "cycle dimensions differ");
    }

    std::vector<Int> c_;
};

/// Rational coefficient vector; holds dual cycles E_j^* and discrepancies.
class QCycle {
public:
    QCycle() = default;
    explicit QCycle(std::vector<Rat> coefficients) : c_(std::move(coefficients)) {}

    static QCycle of(const Cycle& c) {
        std::vector<Rat> v;
        v.reserve(c.size());
        for (int i = 0; i < c.size(); ++i) v.emplace_back(c[i]);
        return QCycle(std::move(v));
    }

    int size() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }
    const std::vector<Rat>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const QCycle& a, const QCycle& b) { return a.c_ == b.c_; }

private:
    std::vector<Rat> c_;
};

}  // namespace resgraph
