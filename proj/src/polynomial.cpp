#include "lgb/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lgb {

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << vars[i];
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
    return monomial_string(*this, vars);
}

Polynomial Polynomial::constant(std::vector<std::string> vars, const Scalar& c) {
    Polynomial p(std::move(vars));
    p.add_term(Monomial(p.nvars()), c);
    return p;
}

Polynomial Polynomial::term(std::vector<std::string> vars, Monomial m, const Scalar& c) {
    Polynomial p(std::move(vars));
    if (m.nvars() != p.nvars()) fail(ErrorCode::VariableMismatch, "monomial arity mismatch");
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, size_t index) {
    Monomial m(vars.size());
    m[index] = 1;
    return term(vars, m, Scalar(Rational(1)));
}

size_t Polynomial::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    fail(ErrorCode::UnknownVariable, "variable '" + name + "' not in ambient list");
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static void check_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars())
        fail(ErrorCode::VariableMismatch, "polynomials over different ambient variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_vars(*this, o);
    Polynomial r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = Polynomial::constant(vars_, Scalar(Rational(1)));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Polynomial Polynomial::derivative(size_t i) const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        r.add_term(d, c * Scalar(Rational(m[i])));
    }
    return r;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) fail(ErrorCode::Internal, "leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars()) fail(ErrorCode::VariableMismatch, "compose: arity mismatch");
    std::vector<std::string> tvars = images.empty() ? std::vector<std::string>{} : images[0].vars();
    for (const auto& im : images)
        if (im.vars() != tvars) fail(ErrorCode::VariableMismatch, "compose: image variable lists differ");

    // memoized variable powers
    std::vector<std::vector<Polynomial>> pows(images.size());
    auto power = [&](size_t i, int e) -> const Polynomial& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(tvars, Scalar(Rational(1))));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Polynomial r(tvars);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(tvars, c);
        for (size_t i = 0; i < nvars(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        r += t;
    }
    return r;
}

Polynomial Polynomial::restrict_to(const std::vector<bool>& mask) const {
    std::vector<std::string> sub;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (mask[i]) {
            sub.push_back(vars_[i]);
            keep.push_back(i);
        }
    Polynomial r(sub);
    for (const auto& [m, c] : terms_) {
        if (!m.supported_on(mask)) continue;
        Monomial s(sub.size());
        for (size_t j = 0; j < keep.size(); ++j) s[j] = m[keep[j]];
        r.add_term(s, c);
    }
    return r;
}

Polynomial Polynomial::embed(std::vector<std::string> new_vars,
                             const std::vector<size_t>& index_map) const {
    Polynomial r(std::move(new_vars));
    for (const auto& [m, c] : terms_) {
        Monomial t(r.nvars());
        for (size_t i = 0; i < nvars(); ++i) t[index_map[i]] = m[i];
        r.add_term(t, c);
    }
    return r;
}

bool Polynomial::has_rational_coeffs() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = false;
        std::string cs;
        if (c.is_rational()) {
            Rational q = c.rational_value();
            neg = q < 0;
            Rational a = abs(q);
            if (a != 1 || m.is_unit()) cs = to_string(a);
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (!cs.empty()) {
            os << cs;
            if (!m.is_unit()) os << "*";
        }
        if (!m.is_unit()) os << monomial_string(m, vars_);
    }
    return os.str();
}

Polynomial extend_scalars(const Polynomial& p, const FieldPtr& field) {
    Polynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (c.field() && field && !c.field()->same_field(*field))
            fail(ErrorCode::FieldMismatch, "coefficient already lives in another extension");
        r.add_term(m, c.is_rational() ? Scalar(field, {c.rational_value()}) : c);
    }
    return r;
}

Polynomial hessian(const Polynomial& w) {
    size_t n = w.nvars();
    if (n == 0) return Polynomial::constant({}, Scalar(Rational(1)));

    std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h[i][j] = w.derivative(i).derivative(j);

    // Laplace expansion; n <= 4 in practice.
    std::vector<size_t> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = j;
    std::function<Polynomial(size_t, std::vector<size_t>)> det =
        [&](size_t row, std::vector<size_t> cs) -> Polynomial {
        if (cs.size() == 1) return h[row][cs[0]];
        Polynomial acc(w.vars());
        for (size_t k = 0; k < cs.size(); ++k) {
            if (h[row][cs[k]].is_zero()) continue;
            std::vector<size_t> rest;
            for (size_t t = 0; t < cs.size(); ++t)
                if (t != k) rest.push_back(cs[t]);
            Polynomial sub = h[row][cs[k]] * det(row + 1, rest);
            if (k % 2 == 0)
                acc += sub;
            else
                acc -= sub;
        }
        return acc;
    };
    return det(0, cols);
}

}  // namespace lgb
