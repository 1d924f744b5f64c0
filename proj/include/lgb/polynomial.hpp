#ifndef LGB_POLYNOMIAL_HPP
#define LGB_POLYNOMIAL_HPP

#include "lgb/monomial.hpp"
#include "lgb/numberfield.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgb {

// Exact multivariate polynomial over Q or a single extension field. Terms are
// stored in descending plain-lex order of exponent vectors, so iteration and
// printing are reproducible bit-for-bit. No zero coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, std::greater<Monomial>>;

    Polynomial() = default;  // zero polynomial in zero variables
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Scalar& c);
    static Polynomial term(std::vector<std::string> vars, Monomial m, const Scalar& c);
    static Polynomial variable(const std::vector<std::string>& vars, size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    size_t var_index(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Formal partial derivative in variable i.
    Polynomial derivative(size_t i) const;

    // Leading term with respect to a monomial order; polynomial must be
    // nonzero.
    std::pair<Monomial, Scalar> leading_term(const MonomialOrder& order) const;

    // W(images[0], ..., images[n-1]); all images share one ambient list.
    Polynomial compose(const std::vector<Polynomial>& images) const;

    // Keeps exactly the terms supported on the masked variables and drops the
    // other variables from the ambient list. The empty mask yields the
    // zero-variable polynomial.
    Polynomial restrict_to(const std::vector<bool>& mask) const;

    // Reinterprets this polynomial in a larger/reordered ambient list;
    // index_map[i] is the position of vars()[i] in new_vars.
    Polynomial embed(std::vector<std::string> new_vars, const std::vector<size_t>& index_map) const;

    // True when every nonzero coefficient is rational.
    bool has_rational_coeffs() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Determinant of the matrix of second partial derivatives. The zero-variable
// polynomial has Hess = 1 by convention.
Polynomial hessian(const Polynomial& w);

// Same polynomial with every coefficient re-embedded in the given extension
// field; rejects coefficients that already live in a different extension.
Polynomial extend_scalars(const Polynomial& p, const FieldPtr& field);

// Pretty exponent-vector monomial with given names, e.g. "x^2*y".
std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace lgb

#endif
