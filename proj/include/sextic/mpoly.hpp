#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/number_field.hpp"
#include "sextic/rational.hpp"

namespace sextic {

/// Variable/weight context shared by all polynomials of one ambient ring.
struct Ring {
    std::vector<std::string> vars;
    std::vector<int> weights;

    int index_of(const std::string& v) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v) return int(i);
        return -1;
    }
    bool has_var(const std::string& v) const { return index_of(v) >= 0; }
    std::size_t nvars() const { return vars.size(); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, std::vector<int> weights) {
    if (vars.size() != weights.size()) throw std::runtime_error("make_ring: size mismatch");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->weights = std::move(weights);
    return r;
}

/// The ambient coordinate ring of P(1,1,2,2,3).
inline RingPtr wps_ring() {
    static RingPtr r = make_ring({"x1", "y1", "x2", "y2", "x3"}, {1, 1, 2, 2, 3});
    return r;
}

using Expo = std::vector<int>;

inline bool compatible(const RingPtr& a, const RingPtr& b) {
    return a == b || (a->vars == b->vars && a->weights == b->weights);
}

/// Sparse multivariate polynomial with exact coefficients (rational or
/// number-field) and a weight vector per variable.
class MPoly {
public:
    MPoly() : R_(wps_ring()) {}
    explicit MPoly(RingPtr R) : R_(std::move(R)) {}
    MPoly(RingPtr R, const FElem& constant) : R_(std::move(R)) {
        if (!constant.is_zero()) t_[Expo(R_->nvars(), 0)] = constant;
    }

    static MPoly variable(const RingPtr& R, const std::string& v) {
        int i = R->index_of(v);
        if (i < 0) throw std::runtime_error("MPoly: unknown variable " + v);
        MPoly p(R);
        Expo e(R->nvars(), 0);
        e[std::size_t(i)] = 1;
        p.t_[e] = FElem(1);
        return p;
    }

    const RingPtr& ring() const { return R_; }
    const std::map<Expo, FElem>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    void set_coeff(const Expo& e, const FElem& c) {
        if (c.is_zero())
            t_.erase(e);
        else
            t_[e] = c;
    }
    FElem coeff(const Expo& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? FElem(0) : it->second;
    }
    FElem constant_term() const { return coeff(Expo(R_->nvars(), 0)); }

    int weighted_degree(const Expo& e) const {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * R_->weights[i];
        return d;
    }
    static int total_degree(const Expo& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    int max_weighted_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, weighted_degree(e));
        return d;
    }
    int max_total_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, total_degree(e));
        return d;
    }
    /// Lowest total degree among terms (order of vanishing at the origin).
    int order() const {
        int d = -1;
        for (auto& [e, c] : t_) {
            int t = total_degree(e);
            if (d < 0 || t < d) d = t;
        }
        return d;
    }
    bool is_weighted_homogeneous(int d) const {
        for (auto& [e, c] : t_)
            if (weighted_degree(e) != d) return false;
        return true;
    }
    std::optional<int> homogeneous_weighted_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) {
            int w = weighted_degree(e);
            if (d < 0)
                d = w;
            else if (w != d)
                return std::nullopt;
        }
        return d < 0 ? std::optional<int>() : d;
    }
    int degree_in(int var) const {
        int d = 0;
        for (auto& [e, c] : t_) d = std::max(d, e[std::size_t(var)]);
        return d;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check(a, b);
        MPoly r = a;
        for (auto& [e, c] : b.t_) {
            auto it = r.t_.find(e);
            if (it == r.t_.end())
                r.t_[e] = c;
            else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check(a, b);
        MPoly r(a.R_);
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                Expo e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                auto it = r.t_.find(e);
                if (it == r.t_.end()) {
                    FElem c = ca * cb;
                    if (!c.is_zero()) r.t_[e] = c;
                } else {
                    it->second = it->second + ca * cb;
                    if (it->second.is_zero()) r.t_.erase(it);
                }
            }
        return r;
    }
    friend MPoly operator*(const MPoly& p, const FElem& s) { return s * p; }
    friend MPoly operator*(const FElem& s, const MPoly& p) {
        MPoly r(p.R_);
        if (s.is_zero()) return r;
        for (auto& [e, c] : p.t_) {
            FElem x = s * c;
            if (!x.is_zero()) r.t_[e] = x;
        }
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(int e) const {
        MPoly r(R_, FElem(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    MPoly derivative(int var) const {
        MPoly r(R_);
        for (auto& [e, c] : t_) {
            int k = e[std::size_t(var)];
            if (k == 0) continue;
            Expo d = e;
            d[std::size_t(var)] -= 1;
            r.t_[d] = c * FElem(k);
        }
        return r;
    }
    MPoly derivative(const std::string& v) const { return derivative(must_index(v)); }

    /// Ring homomorphism: replace each mapped variable by its image (images
    /// live in the target ring; unmapped variables must exist there too).
    MPoly substitute(const std::map<std::string, MPoly>& images) const {
        RingPtr target = R_;
        for (auto& [v, img] : images) {
            target = img.ring();
            break;
        }
        std::vector<MPoly> var_img;
        for (std::size_t i = 0; i < R_->nvars(); ++i) {
            auto it = images.find(R_->vars[i]);
            if (it != images.end()) {
                if (!compatible(it->second.ring(), target))
                    throw std::runtime_error("substitute: image ring mismatch");
                var_img.push_back(it->second);
            } else {
                var_img.push_back(MPoly::variable(target, R_->vars[i]));
            }
        }
        MPoly out(target);
        for (auto& [e, c] : t_) {
            MPoly term(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term *= var_img[i].pow(e[i]);
            out += term;
        }
        return out;
    }

    /// Discard all terms of total degree > n (jet truncation).
    MPoly truncate_total(int n) const {
        MPoly r(R_);
        for (auto& [e, c] : t_)
            if (total_degree(e) <= n) r.t_[e] = c;
        return r;
    }

    FElem eval(const std::vector<FElem>& point) const {
        if (point.size() != R_->nvars()) throw std::runtime_error("eval: arity mismatch");
        FElem out(0);
        for (auto& [e, c] : t_) {
            FElem t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            out = out + t;
        }
        return out;
    }

    /// Every coefficient rational?
    bool rational_coeffs() const {
        for (auto& [e, c] : t_)
            if (!c.is_rational()) return false;
        return true;
    }
    std::optional<FieldPtr> coefficient_field() const {
        FieldPtr F = nullptr;
        for (auto& [e, c] : t_)
            if (c.field()) {
                if (F && !same_field(F, c.field())) return std::nullopt;
                F = c.field();
            }
        return F;
    }

    /// Scale so the polynomial is primitive-integral (rational coefficients)
    /// or monic in its given leading coefficient. Returns the applied factor.
    MPoly normalized_content() const {
        if (is_zero()) return *this;
        if (rational_coeffs()) {
            Int l = 1;
            for (auto& [e, c] : t_) l = lcm(l, den(c.rational_value()));
            Int g = 0;
            for (auto& [e, c] : t_) g = gcd(g, abs(num(c.rational_value() * Rational(l))));
            Rational f = Rational(l, g);
            if (t_.rbegin()->second.rational_value() < 0) f = -f;
            return FElem(f) * (*this);
        }
        return t_.rbegin()->second.inverse() * (*this);
    }

    std::string str() const {
        if (t_.empty()) return "0";
        // render in a stable order: highest weighted degree first, then map order
        std::vector<const std::pair<const Expo, FElem>*> ts;
        for (auto& kv : t_) ts.push_back(&kv);
        std::stable_sort(ts.begin(), ts.end(), [this](auto* a, auto* b) {
            int wa = weighted_degree(a->first), wb = weighted_degree(b->first);
            if (wa != wb) return wa > wb;
            return a->first > b->first;
        });
        std::ostringstream os;
        bool first = true;
        for (auto* kv : ts) {
            const auto& [e, c] = *kv;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
            if (neg) cs = cs.substr(1);
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            bool has_var = total_degree(e) > 0;
            bool unit = c.is_rational() && abs(c.rational_value()) == 1;
            if (!has_var || !unit) {
                if (!c.is_rational()) os << "(" << c.str() << ")";
                else os << cs;
                if (has_var) os << "*";
            }
            bool fv = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!fv) os << "*";
                fv = false;
                os << R_->vars[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    RingPtr R_;
    std::map<Expo, FElem> t_;

    int must_index(const std::string& v) const {
        int i = R_->index_of(v);
        if (i < 0) throw std::runtime_error("MPoly: unknown variable " + v);
        return i;
    }
    static void check(const MPoly& a, const MPoly& b) {
        if (!compatible(a.R_, b.R_))
            throw std::runtime_error("MPoly: mismatched variable sets");
    }
};

/// add | mul dispatch with the usual ring-compatibility checks.
inline MPoly poly_arith(const MPoly& p, const MPoly& q, const std::string& kind) {
    if (kind == "add") return p + q;
    if (kind == "mul") return p * q;
    throw std::runtime_error("poly_arith: unknown kind " + kind);
}

} // namespace sextic
