#include "lgb/numberfield.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lgb {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "parse-error";
        case ErrorCode::UnknownVariable: return "unknown-variable";
        case ErrorCode::BadExponent: return "bad-exponent";
        case ErrorCode::VariableMismatch: return "variable-mismatch";
        case ErrorCode::FieldMismatch: return "field-mismatch";
        case ErrorCode::ZeroDivisor: return "zero-divisor";
        case ErrorCode::ReducibleModulus: return "reducible-modulus";
        case ErrorCode::NotQuasihomogeneous: return "not-quasihomogeneous";
        case ErrorCode::NonUniqueWeights: return "non-unique-weights";
        case ErrorCode::WeightOutOfRange: return "weight-out-of-range";
        case ErrorCode::NotAdmissible: return "not-admissible";
        case ErrorCode::InfiniteDimensional: return "infinite-dimensional";
        case ErrorCode::InfiniteGroup: return "infinite-group";
        case ErrorCode::NotASymmetry: return "not-a-symmetry";
        case ErrorCode::NotInSL: return "not-in-sl";
        case ErrorCode::DegenerateSector: return "degenerate-sector";
        case ErrorCode::GammaNotDivisible: return "gamma-not-divisible";
        case ErrorCode::HessianZero: return "hessian-zero";
        case ErrorCode::NotWellBehaved: return "not-well-behaved";
        case ErrorCode::PreconditionFailed: return "precondition-failed";
        case ErrorCode::SectorImageMismatch: return "sector-image-mismatch";
        case ErrorCode::BasisMismatch: return "basis-mismatch";
        case ErrorCode::NotBinomialSolvable: return "not-binomial-solvable";
        case ErrorCode::SearchInconclusive: return "search-inconclusive";
        case ErrorCode::WeightMismatch: return "weight-mismatch";
        case ErrorCode::BadInput: return "bad-input";
        case ErrorCode::Internal: return "internal-error";
    }
    return "unknown-error";
}

bool rational_kth_root(const Rational& q, unsigned long k, Rational& root) {
    if (k == 0) return false;
    if (k == 1) {
        root = q;
        return true;
    }
    if (q == 0) {
        root = Rational(0);
        return true;
    }
    const bool neg = q < 0;
    if (neg && k % 2 == 0) return false;
    Integer num = abs(Integer(q.get_num()));
    Integer den(q.get_den());
    Integer rn = iroot(num, k);
    Integer rd = iroot(den, k);
    Integer pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), rn.get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), rd.get_mpz_t(), k);
    if (pn != num || pd != den) return false;
    root = make_rational(neg ? -rn : rn, rd);
    return true;
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over Q, little-endian coefficient vectors
// ---------------------------------------------------------------------------

namespace {

using UPoly = std::vector<Rational>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

// a mod b, b nonzero; also returns quotient when wanted.
UPoly udivmod(UPoly a, const UPoly& b, UPoly* quot = nullptr) {
    assert(!b.empty());
    UPoly q;
    utrim(a);
    while (udeg(a) >= udeg(b)) {
        int shift = udeg(a) - udeg(b);
        Rational c = a.back() / b.back();
        if (quot) {
            if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, Rational(0));
            q[shift] += c;
        }
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        utrim(a);
        if (a.empty()) break;
    }
    if (quot) *quot = q;
    return a;
}

UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    utrim(d);
    return d;
}

void umakemonic(UPoly& p) {
    if (p.empty()) return;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = udivmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    umakemonic(a);
    return a;
}

// Extended Euclid: returns g = gcd(a,b) monic with u*a + v*b = g.
UPoly uxgcd(UPoly a, UPoly b, UPoly& u, UPoly& v) {
    UPoly u0 = {Rational(1)}, v0 = {};
    UPoly u1 = {}, v1 = {Rational(1)};
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly q;
        UPoly r = udivmod(a, b, &q);
        a = std::move(b);
        b = std::move(r);
        UPoly nu = usub(u0, umul(q, u1));
        UPoly nv = usub(v0, umul(q, v1));
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
        for (auto& c : u0) c /= lc;
        for (auto& c : v0) c /= lc;
    }
    u = std::move(u0);
    v = std::move(v0);
    return a;
}

std::vector<unsigned long> prime_divisors(unsigned long k) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            ps.push_back(p);
            while (k % p == 0) k /= p;
        }
    }
    if (k > 1) ps.push_back(k);
    return ps;
}

}  // namespace

bool poly_is_squarefree(const std::vector<Rational>& m) {
    UPoly p = m;
    utrim(p);
    if (udeg(p) < 1) return false;
    UPoly g = ugcd(p, uderiv(p));
    return udeg(g) == 0;
}

bool binomial_is_irreducible(unsigned long k, const Rational& q) {
    if (q == 0) return k == 1;
    if (k == 1) return true;
    Rational s;
    for (unsigned long p : prime_divisors(k))
        if (rational_kth_root(q, p, s)) return false;
    if (k % 4 == 0 && rational_kth_root(-q / 4, 4, s)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

FieldPtr NumberField::make(std::string symbol, std::vector<Rational> modulus,
                           bool require_irreducible) {
    utrim(modulus);
    if (udeg(modulus) < 2)
        fail(ErrorCode::BadInput, "modulus must have degree >= 2 (degree-1 moduli are plain rationals)");
    umakemonic(modulus);
    if (!poly_is_squarefree(modulus))
        fail(ErrorCode::ReducibleModulus, "modulus has repeated factors");

    // Certify irreducibility where we can decide it exactly: binomials via
    // Vahlen-Capelli, quadratics via the discriminant.
    bool irreducible = false;
    int d = udeg(modulus);
    bool is_binomial = true;
    for (int i = 1; i < d; ++i)
        if (modulus[i] != 0) is_binomial = false;
    if (is_binomial) {
        irreducible = binomial_is_irreducible(static_cast<unsigned long>(d), -modulus[0]);
    } else if (d == 2) {
        Rational disc = modulus[1] * modulus[1] - 4 * modulus[0];
        Rational s;
        irreducible = !rational_kth_root(disc, 2, s);
    } else if (d == 4 && modulus[1] == 0 && modulus[3] == 0) {
        // t^4 + P t^2 + Q: reducible over Q iff P^2-4Q is a square (split into
        // quadratics in t^2), or Q is a square with +-2 sqrt(Q) - P a square
        // (symmetric split), or it has a rational root.
        Rational P = modulus[2], Q = modulus[0];
        Rational s;
        bool red = rational_kth_root(P * P - 4 * Q, 2, s);
        if (!red && rational_kth_root(Q, 2, s)) {
            Rational t;
            if (rational_kth_root(2 * s - P, 2, t) || rational_kth_root(-2 * s - P, 2, t)) red = true;
        }
        irreducible = !red;
    }
    if (require_irreducible && !irreducible)
        fail(ErrorCode::ReducibleModulus, "modulus not certified irreducible (strict mode)");

    return FieldPtr(new NumberField(std::move(symbol), std::move(modulus), irreducible));
}

std::string NumberField::modulus_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = modulus_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) {
            os << to_string(a);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << symbol_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) {
        if (coeffs_.size() != 1) fail(ErrorCode::Internal, "rational scalar needs one coefficient");
        return;
    }
    size_t d = static_cast<size_t>(field_->degree());
    if (coeffs_.size() > d) {
        UPoly r = udivmod(coeffs_, field_->modulus());
        coeffs_ = std::move(r);
    }
    coeffs_.resize(d, Rational(0));
}

Scalar Scalar::generator(const FieldPtr& field) {
    std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
    c[1] = 1;
    return Scalar(field, std::move(c));
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) fail(ErrorCode::FieldMismatch, "scalar is not rational: " + str());
    return coeffs_[0];
}

FieldPtr Scalar::common_field(const Scalar& a, const Scalar& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    if (a.field_ == b.field_ || a.field_->same_field(*b.field_)) return a.field_;
    fail(ErrorCode::FieldMismatch, "scalars from distinct extensions: Q[" + a.field_->symbol() +
                                       "]/(" + a.field_->modulus_string() + ") vs Q[" +
                                       b.field_->symbol() + "]/(" + b.field_->modulus_string() + ")");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    FieldPtr f = common_field(*this, o);
    size_t n = f ? static_cast<size_t>(f->degree()) : 1;
    coeffs_.resize(n, Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    field_ = std::move(f);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    FieldPtr f = common_field(*this, o);
    size_t n = f ? static_cast<size_t>(f->degree()) : 1;
    coeffs_.resize(n, Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    field_ = std::move(f);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    FieldPtr f = common_field(*this, o);
    if (!f) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    UPoly prod = umul(coeffs_, o.coeffs_);
    UPoly red = udivmod(std::move(prod), f->modulus());
    red.resize(static_cast<size_t>(f->degree()), Rational(0));
    coeffs_ = std::move(red);
    field_ = std::move(f);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorCode::ZeroDivisor, "division by zero");
    if (!field_ || is_rational()) {
        Scalar r(Rational(1) / coeffs_[0]);
        // keep the field attached so subsequent ops stay cheap to promote
        if (field_) r = Scalar(field_, {r.coeffs_[0]});
        return r;
    }
    UPoly u, v;
    UPoly g = uxgcd(coeffs_, field_->modulus(), u, v);
    if (udeg(g) != 0) {
        if (field_->irreducible_certified())
            fail(ErrorCode::Internal, "non-unit in certified field");
        fail(ErrorCode::ZeroDivisor,
             "zero divisor modulo uncertified modulus " + field_->modulus_string());
    }
    return Scalar(field_, std::move(u));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc(Rational(1));
    if (field_) acc = Scalar(field_, {Rational(1)});
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    Scalar::common_field(a, b);  // throws on genuine mismatch
    size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (size_t i = 0; i < n; ++i) {
        Rational x = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
        Rational y = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
        if (x != y) return false;
    }
    return true;
}

std::string Scalar::str() const {
    if (is_rational()) return to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) {
            os << to_string(a);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << field_->symbol();
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// binomial roots
// ---------------------------------------------------------------------------

namespace {

BinomialRootResult root_of_binomial_rec(unsigned long k, const Rational& q,
                                        const std::string& symbol) {
    if (k == 0) fail(ErrorCode::BadInput, "zeroth root");
    if (q == 0) return {Scalar(Rational(0)), true, ""};
    if (k == 1) return {Scalar(q), true, ""};

    // p-th power reduction: q = s^p with p | k gives c^(k/p) = s.
    Rational s;
    for (unsigned long p : prime_divisors(k))
        if (rational_kth_root(q, p, s)) return root_of_binomial_rec(k / p, s, symbol);

    if (k % 4 == 0 && rational_kth_root(-q / 4, 4, s)) {
        // Sophie Germain: t^4 + 4 s^4 = (t^2 - 2st + 2s^2)(t^2 + 2st + 2s^2),
        // so with m = k/4, a root of t^(2m) - 2s t^m + 2s^2 satisfies t^k = q.
        s = abs(s);
        unsigned long m = k / 4;
        if (m <= 2) {
            std::vector<Rational> mod(2 * m + 1, Rational(0));
            mod[0] = 2 * s * s;
            mod[m] = -2 * s;
            mod[2 * m] = 1;
            FieldPtr f = NumberField::make(symbol, std::move(mod), true);
            return {Scalar::generator(f), true, ""};
        }
        // No irreducibility certificate for m >= 3; fall through to the
        // square-free t^k - q with a warning.
        std::vector<Rational> mod(k + 1, Rational(0));
        mod[0] = -q;
        mod[k] = 1;
        FieldPtr f = NumberField::make(symbol, std::move(mod), false);
        return {Scalar::generator(f), false,
                "modulus t^" + std::to_string(k) + " - (" + to_string(q) +
                    ") accepted square-free only; it is reducible over Q"};
    }

    // Vahlen-Capelli: no reduction applies, t^k - q is irreducible.
    std::vector<Rational> mod(k + 1, Rational(0));
    mod[0] = -q;
    mod[k] = 1;
    FieldPtr f = NumberField::make(symbol, std::move(mod), true);
    return {Scalar::generator(f), true, ""};
}

}  // namespace

BinomialRootResult root_of_binomial(unsigned long k, const Rational& q,
                                    const std::string& symbol) {
    BinomialRootResult r = root_of_binomial_rec(k, q, symbol);
    if (r.value.pow(static_cast<long>(k)) != Scalar(q))
        fail(ErrorCode::Internal, "binomial root verification failed");
    return r;
}

}  // namespace lgb
