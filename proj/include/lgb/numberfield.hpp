#ifndef LGB_NUMBERFIELD_HPP
#define LGB_NUMBERFIELD_HPP

#include "lgb/errors.hpp"
#include "lgb/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lgb {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[t]/(m(t)) for a monic nonconstant m with rational coefficients. Plain
// rationals are represented by a null FieldPtr (the degenerate modulus t),
// so a NumberField instance always has degree >= 2.
//
// Moduli the toolkit constructs itself are certified irreducible over Q.
// User-supplied moduli are checked square-free at minimum; a modulus that is
// square-free but not certified irreducible carries a warning flag, and any
// attempt to invert a zero divisor in such a ring raises ZeroDivisor.
class NumberField {
public:
    // modulus = coefficients c0..ck of m(t) = c0 + c1 t + ... + ck t^k.
    // Normalizes to monic. When require_irreducible is set, a modulus that
    // cannot be certified irreducible is rejected (ReducibleModulus).
    static FieldPtr make(std::string symbol, std::vector<Rational> modulus,
                         bool require_irreducible = false);

    const std::string& symbol() const { return symbol_; }
    const std::vector<Rational>& modulus() const { return modulus_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    bool irreducible_certified() const { return irreducible_; }
    std::string modulus_string() const;

    bool same_field(const NumberField& other) const {
        return symbol_ == other.symbol_ && modulus_ == other.modulus_;
    }

private:
    NumberField(std::string symbol, std::vector<Rational> modulus, bool irreducible)
        : symbol_(std::move(symbol)), modulus_(std::move(modulus)), irreducible_(irreducible) {}

    std::string symbol_;
    std::vector<Rational> modulus_;
    bool irreducible_;
};

// Element of Q or of a single extension Q[t]/(m). The coefficient tower is
// deliberately flat: every computation here needs at most one adjoined
// algebraic constant at a time.
class Scalar {
public:
    Scalar() : coeffs_{Rational(0)} {}
    Scalar(const Rational& q) : coeffs_{q} {}
    Scalar(long n) : coeffs_{Rational(n)} {}
    Scalar(int n) : coeffs_{Rational(n)} {}
    Scalar(FieldPtr field, std::vector<Rational> coeffs);

    // The class of t in Q[t]/(m).
    static Scalar generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    // Value lies in Q (true for all plain rationals and for extension
    // elements whose higher coefficients vanish).
    bool is_rational() const;
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    Scalar inverse() const;
    Scalar pow(long e) const;

    std::string str() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void normalize();
    // Promotes *this and o into a common field; throws FieldMismatch when
    // both carry distinct nontrivial fields.
    static FieldPtr common_field(const Scalar& a, const Scalar& b);

    FieldPtr field_;                 // null = plain rational
    std::vector<Rational> coeffs_;  // size 1 (rational) or field degree
};

// A certified solution of c^k = q: the witness scalar plus provenance notes.
struct BinomialRootResult {
    Scalar value;
    bool modulus_certified_irreducible = true;
    std::string note;  // set when the fallback square-free path was taken
};

// Constructs an exact c with c^k = q, adjoining at most one extension field.
// Picks an irreducible defining polynomial whenever the Vahlen-Capelli
// analysis of t^k - q certifies one (including the Sophie Germain split for
// q = -4 s^4); otherwise falls back to the square-free modulus t^k - q with
// a recorded warning.
BinomialRootResult root_of_binomial(unsigned long k, const Rational& q,
                                    const std::string& symbol);

// t^k - q irreducibility over Q per Vahlen-Capelli: irreducible iff q is not
// a p-th power for any prime p | k, and (when 4 | k) q != -4 s^4.
bool binomial_is_irreducible(unsigned long k, const Rational& q);

// gcd(m, m') is constant, i.e. m has no repeated roots.
bool poly_is_squarefree(const std::vector<Rational>& m);

}  // namespace lgb

#endif
