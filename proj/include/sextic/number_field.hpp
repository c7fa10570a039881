#pragma once

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/rational.hpp"

namespace sextic {

/// Q[t]/(m(t)) for a monic irreducible m of degree 2 or 3. Degree-1 contexts
/// are represented by a null FieldPtr (plain rationals). Irreducibility is
/// certified at construction time by adjoin_root (see upoly.hpp).
struct NumberField {
    std::vector<Rational> min_poly; // monic, ascending coefficients, back()==1
    std::string gen_name = "a";

    int degree() const { return int(min_poly.size()) - 1; }
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->min_poly == b->min_poly;
}

/// Element of Q or of a degree<=3 number field; the workhorse coefficient
/// type of every polynomial in the project.
class FElem {
public:
    FElem() : c_(1, Rational(0)) {}
    FElem(const Rational& r) : c_(1, r) {}
    FElem(int v) : c_(1, Rational(v)) {}
    FElem(FieldPtr F, std::vector<Rational> c) : F_(std::move(F)), c_(std::move(c)) {
        if (F_) {
            c_.resize(std::size_t(F_->degree()), Rational(0));
            reduce_trivial_field();
        } else {
            c_.resize(1);
        }
    }

    static FElem generator(const FieldPtr& F) {
        std::vector<Rational> c(std::size_t(F->degree()), Rational(0));
        c[1] = 1;
        return FElem(F, std::move(c));
    }

    const FieldPtr& field() const { return F_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const Rational& rational_value() const {
        if (!is_rational()) throw std::runtime_error("FElem: not rational");
        return c_[0];
    }

    friend FElem operator+(const FElem& a, const FElem& b) {
        auto [x, y] = promote(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend FElem operator-(const FElem& a, const FElem& b) {
        auto [x, y] = promote(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    FElem operator-() const {
        FElem r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend FElem operator*(const FElem& a, const FElem& b) {
        auto [x, y] = promote(a, b);
        if (!x.F_) return FElem(x.c_[0] * y.c_[0]);
        std::size_t d = x.c_.size();
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (x.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += x.c_[i] * y.c_[j];
        }
        // reduce modulo the monic minimal polynomial
        const auto& m = x.F_->min_poly;
        for (std::size_t k = prod.size(); k-- > d;) {
            if (prod[k] == 0) continue;
            Rational lead = prod[k];
            prod[k] = 0;
            for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= lead * m[i];
        }
        prod.resize(d);
        return FElem(x.F_, std::move(prod));
    }
    FElem inverse() const;
    friend FElem operator/(const FElem& a, const FElem& b) { return a * b.inverse(); }

    FElem& operator+=(const FElem& o) { return *this = *this + o; }
    FElem& operator-=(const FElem& o) { return *this = *this - o; }
    FElem& operator*=(const FElem& o) { return *this = *this * o; }
    FElem& operator/=(const FElem& o) { return *this = *this / o; }

    friend bool operator==(const FElem& a, const FElem& b) { return (a - b).is_zero(); }
    friend bool operator!=(const FElem& a, const FElem& b) { return !(a == b); }

    /// Total order used for deterministic container layouts and output.
    friend bool operator<(const FElem& a, const FElem& b) {
        int da = a.F_ ? a.F_->degree() : 1, db = b.F_ ? b.F_->degree() : 1;
        if (da != db) return da < db;
        if (a.F_ && b.F_ && a.F_->min_poly != b.F_->min_poly)
            return a.F_->min_poly < b.F_->min_poly;
        return a.c_ < b.c_;
    }

    std::string str() const {
        if (!F_ || is_rational()) return to_string(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rational av = abs(c_[i]);
            if (first)
                os << (c_[i] < 0 ? "-" : "");
            else
                os << (c_[i] < 0 ? "-" : "+");
            first = false;
            if (i == 0) {
                os << to_string(av);
            } else {
                if (av != 1) os << to_string(av) << "*";
                os << F_->gen_name;
                if (i > 1) os << "^" << i;
            }
        }
        if (first) return "0";
        return os.str();
    }

private:
    FieldPtr F_; // null = Q
    std::vector<Rational> c_;

    void reduce_trivial_field() {
        if (F_ && F_->degree() == 1) {
            // t - r: generator is the rational r
            Rational r = -F_->min_poly[0];
            Rational v = c_[0] + c_[1] * r;
            F_.reset();
            c_.assign(1, v);
        }
    }

    static std::pair<FElem, FElem> promote(const FElem& a, const FElem& b) {
        if (same_field(a.F_, b.F_)) return {a, b};
        if (!a.F_) {
            FElem x(b.F_, std::vector<Rational>(std::size_t(b.F_->degree()), Rational(0)));
            x.c_[0] = a.c_[0];
            return {x, b};
        }
        if (!b.F_) {
            FElem y(a.F_, std::vector<Rational>(std::size_t(a.F_->degree()), Rational(0)));
            y.c_[0] = b.c_[0];
            return {a, y};
        }
        throw std::runtime_error("FElem: incompatible number fields " + a.str() + " vs " + b.str());
    }
};

/// Extended Euclid over Q[t] against the minimal polynomial.
inline FElem FElem::inverse() const {
    if (is_zero()) throw std::runtime_error("FElem: division by zero");
    if (!F_ || is_rational()) {
        if (c_[0] == 0) throw std::runtime_error("FElem: division by zero");
        FElem r(Rational(1) / c_[0]);
        if (F_) {
            std::vector<Rational> cc(std::size_t(F_->degree()), Rational(0));
            cc[0] = r.c_[0];
            return FElem(F_, std::move(cc));
        }
        return r;
    }
    // r0 = m, r1 = this; track s with r = s*this (mod m)
    std::vector<Rational> r0 = F_->min_poly, r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0(1, Rational(0)), s1(1, Rational(1));
    auto deg = [](const std::vector<Rational>& p) { return int(p.size()) - 1; };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rational> q(std::size_t(std::max(0, deg(r0) - deg(r1)) + 1), Rational(0));
        std::vector<Rational> rem = r0;
        while (deg(rem) >= deg(r1) && !(deg(rem) == 0 && rem[0] == 0)) {
            int shift = deg(rem) - deg(r1);
            Rational f = rem.back() / r1.back();
            q[std::size_t(shift)] += f;
            for (int i = 0; i <= deg(r1); ++i) rem[std::size_t(i + shift)] -= f * r1[std::size_t(i)];
            while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
            if (rem.size() == 1 && rem[0] == 0) break;
        }
        // s_next = s0 - q*s1
        std::vector<Rational> qs(q.size() + s1.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        std::vector<Rational> s2(std::max(s0.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
        while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
    }
    if (r1.empty() || r1[0] == 0)
        throw std::runtime_error("FElem: modulus not irreducible (zero divisor hit)");
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    std::vector<Rational> inv(std::size_t(F_->degree()), Rational(0));
    for (std::size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / r1[0];
    return FElem(F_, std::move(inv));
}

} // namespace sextic
