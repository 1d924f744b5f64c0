#ifndef LGB_MONOMIAL_HPP
#define LGB_MONOMIAL_HPP

#include "lgb/errors.hpp"
#include "lgb/rational.hpp"

#include <string>
#include <vector>

namespace lgb {

// Exponent vector over a fixed ambient variable list; the all-zeros vector is
// the unit monomial. The ambient list itself lives in Polynomial / ring
// contexts, a Monomial is just the exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    size_t nvars() const { return e_.size(); }
    int operator[](size_t i) const { return e_[i]; }
    int& operator[](size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_unit() const {
        for (int a : e_)
            if (a != 0) return false;
        return true;
    }

    long total_degree() const {
        long d = 0;
        for (int a : e_) d += a;
        return d;
    }

    Rational weighted_degree(const std::vector<Rational>& w) const {
        Rational d(0);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != 0) d += Rational(e_[i]) * w[i];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o, exact; caller checks divisibility via divides().
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) fail(ErrorCode::Internal, "inexact monomial division");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    // Supported only on the given variable indices?
    bool supported_on(const std::vector<bool>& mask) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != 0 && !mask[i]) return false;
        return true;
    }

    std::string str(const std::vector<std::string>& vars) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.e_ == b.e_); }
    // Structural order (plain lex on exponent vectors): used for canonical
    // container keys, not as the ring's monomial order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b.e_ < a.e_; }

private:
    std::vector<int> e_;
};

// Total multiplicative monomial order with 1 minimal.
struct MonomialOrder {
    enum class Kind {
        WDegRevLex,  // weighted degree, ties by reverse lexicographic
        Lex,
    };

    Kind kind = Kind::Lex;
    std::vector<Rational> weights;  // positive; required for WDegRevLex

    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder wdegrevlex(std::vector<Rational> w) {
        for (const auto& q : w)
            if (q <= 0) fail(ErrorCode::BadInput, "monomial order weights must be positive");
        return {Kind::WDegRevLex, std::move(w)};
    }
    // Total-degree graded order (all weights 1).
    static MonomialOrder degrevlex(size_t nvars) {
        return {Kind::WDegRevLex, std::vector<Rational>(nvars, Rational(1))};
    }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind == Kind::WDegRevLex) {
            Rational da = a.weighted_degree(weights);
            Rational db = b.weighted_degree(weights);
            if (da != db) return da < db ? -1 : 1;
            // revlex tie-break: larger = smaller exponent on the last
            // differing variable.
            for (size_t i = a.nvars(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return 0;
        }
        for (size_t i = 0; i < a.nvars(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

}  // namespace lgb

#endif
