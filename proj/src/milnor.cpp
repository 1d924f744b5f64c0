#include "lgb/milnor.hpp"

#include <algorithm>
#include <sstream>

namespace lgb {

MilnorRing::MilnorRing(const Polynomial& w) : w_(w) { build(std::nullopt); }

MilnorRing::MilnorRing(const Polynomial& w, std::vector<Rational> weights) : w_(w) {
    build(std::move(weights));
}

void MilnorRing::build(std::optional<std::vector<Rational>> supplied_weights) {
    const size_t n = w_.nvars();

    if (n == 0) {
        // empty convention: mu = 1, basis {1}, Hess = 1, <1,1> = 1
        if (!w_.is_zero() ) fail(ErrorCode::BadInput, "nonzero constant polynomial has no critical ring");
        gb_ = GroebnerBasis{{}, MonomialOrder::lex(), {}, true};
        basis_ = {Monomial(0)};
        c_hat_ = 0;
        hess_coeff_ = Scalar(Rational(1));
        hess_mon_ = Monomial(0);
        mult_ = {{{{0, Scalar(Rational(1))}}}};
        pairing_ = MatS(1, 1);
        pairing_(0, 0) = Scalar(Rational(1));
        return;
    }

    if (supplied_weights) {
        weights_ = std::move(*supplied_weights);
        if (weights_.size() != n) fail(ErrorCode::BadInput, "weight count mismatch");
    } else {
        weights_ = compute_weights(w_).q;  // weight failures propagate
    }

    if (w_.is_zero()) fail(ErrorCode::InfiniteDimensional, "zero polynomial in " + std::to_string(n) + " variables");

    MonomialOrder order = MonomialOrder::wdegrevlex(weights_);
    gb_ = buchberger(jacobian(w_), order);

    StandardMonomials sm = standard_monomials(gb_);
    if (!sm.finite)
        fail(ErrorCode::InfiniteDimensional,
             "Jacobian quotient of " + w_.str() + " is infinite dimensional");
    basis_ = std::move(sm.monomials);
    if (basis_.empty()) fail(ErrorCode::InfiniteDimensional, "empty basis: unit Jacobian ideal for " + w_.str());

    // dimension identity mu = prod(1/q_i - 1)
    Rational mu_formula(1);
    for (const auto& q : weights_) mu_formula *= (Rational(1) / q - 1);
    if (mu_formula != Rational(static_cast<long>(basis_.size())))
        fail(ErrorCode::Internal, "Milnor number mismatch for " + w_.str() + ": staircase " +
                                      std::to_string(basis_.size()) + " vs formula " +
                                      to_string(mu_formula));

    c_hat_ = 0;
    for (const auto& q : weights_) c_hat_ += Rational(1) - 2 * q;

    // top graded piece is one dimensional and sits in weighted degree c_hat
    const Monomial& top = basis_.back();
    if (weighted_degree(top) != c_hat_)
        fail(ErrorCode::Internal, "top basis degree != central charge for " + w_.str());
    if (basis_.size() >= 2 && weighted_degree(basis_[basis_.size() - 2]) == c_hat_)
        fail(ErrorCode::Internal, "top graded piece not one dimensional for " + w_.str());

    Polynomial hnf = normal_form(hessian(w_), gb_);
    if (hnf.is_zero()) fail(ErrorCode::HessianZero, "Hessian reduces to zero for " + w_.str());
    if (hnf.term_count() != 1)
        fail(ErrorCode::Internal, "Hessian normal form is not a single term: " + hnf.str());
    hess_mon_ = hnf.terms().begin()->first;
    hess_coeff_ = hnf.terms().begin()->second;
    if (!(hess_mon_ == top))
        fail(ErrorCode::Internal, "Hessian normal form does not span the top degree: " + hnf.str());

    // multiplication table
    const size_t mu = basis_.size();
    mult_.assign(mu, std::vector<std::vector<std::pair<size_t, Scalar>>>(mu));
    for (size_t i = 0; i < mu; ++i) {
        for (size_t j = i; j < mu; ++j) {
            Polynomial prod = Polynomial::term(w_.vars(), basis_[i] * basis_[j], Scalar(Rational(1)));
            Polynomial nf = normal_form(prod, gb_);
            std::vector<std::pair<size_t, Scalar>> row;
            for (const auto& [m, c] : nf.terms()) row.emplace_back(basis_index(m), c);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            mult_[i][j] = row;
            if (j != i) mult_[j][i] = std::move(row);
        }
    }

    // residue pairing: <a,b> = mu * coeff_of_hess_monomial(ab) / hess_coeff
    pairing_ = MatS(static_cast<int>(mu), static_cast<int>(mu));
    Scalar mu_scal{Rational(static_cast<long>(mu))};
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) {
            Scalar top_coeff;
            for (const auto& [k, c] : mult_[i][j])
                if (basis_[k] == hess_mon_) top_coeff = c;
            pairing_(static_cast<int>(i), static_cast<int>(j)) =
                mu_scal * top_coeff / hess_coeff_;
        }

    // nondegeneracy at construction for modest dimensions; verify_frobenius
    // performs the exhaustive run regardless of size
    if (mu <= 128) {
        if (field_det(pairing_).is_zero())
            fail(ErrorCode::Internal, "degenerate residue pairing for " + w_.str());
    }
}

size_t MilnorRing::basis_index(const Monomial& m) const {
    auto idx = find_basis_index(m);
    if (!idx) fail(ErrorCode::Internal, "monomial not in basis: " + m.str(w_.vars()));
    return *idx;
}

std::optional<size_t> MilnorRing::find_basis_index(const Monomial& m) const {
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == m) return i;
    return std::nullopt;
}

GradedElement MilnorRing::basis_element(size_t i) const {
    GradedElement e = zero_element();
    e.coords[i] = Scalar(Rational(1));
    return e;
}

GradedElement MilnorRing::reduce(const Polynomial& p) const {
    if (p.vars() != w_.vars()) fail(ErrorCode::VariableMismatch, "reduce: wrong ambient variables");
    Polynomial nf = w_.nvars() == 0 ? p : normal_form(p, gb_);
    GradedElement e = zero_element();
    for (const auto& [m, c] : nf.terms()) e.coords[basis_index(m)] += c;
    return e;
}

const std::vector<std::pair<size_t, Scalar>>& MilnorRing::product_row(size_t i, size_t j) const {
    return mult_[i][j];
}

GradedElement MilnorRing::product(const GradedElement& a, const GradedElement& b) const {
    GradedElement r = zero_element();
    for (size_t i = 0; i < mu(); ++i) {
        if (a.coords[i].is_zero()) continue;
        for (size_t j = 0; j < mu(); ++j) {
            if (b.coords[j].is_zero()) continue;
            Scalar f = a.coords[i] * b.coords[j];
            for (const auto& [k, c] : mult_[i][j]) r.coords[k] += f * c;
        }
    }
    return r;
}

Scalar MilnorRing::pairing(const GradedElement& a, const GradedElement& b) const {
    Scalar s;
    for (size_t i = 0; i < mu(); ++i) {
        if (a.coords[i].is_zero()) continue;
        for (size_t j = 0; j < mu(); ++j) {
            if (b.coords[j].is_zero()) continue;
            s += a.coords[i] * b.coords[j] * pairing(i, j);
        }
    }
    return s;
}

std::optional<Rational> MilnorRing::element_degree(const GradedElement& a) const {
    std::optional<Rational> deg;
    for (size_t i = 0; i < mu(); ++i) {
        if (a.coords[i].is_zero()) continue;
        Rational d = degree(basis_[i]);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

FrobeniusCheckReport verify_frobenius(const MilnorRing& ring) {
    FrobeniusCheckReport rep;
    const size_t mu = ring.mu();

    // pairing symmetry + anti-triangularity by degree
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) {
            rep.record(ring.pairing(i, j) == ring.pairing(j, i),
                       "pairing not symmetric at (" + ring.basis_string(i) + ", " +
                           ring.basis_string(j) + ")");
            if (ring.degree(ring.basis()[i]) + ring.degree(ring.basis()[j]) != 2 * ring.c_hat())
                rep.record(ring.pairing(i, j).is_zero(),
                           "pairing nonzero off the top degree at (" + ring.basis_string(i) +
                               ", " + ring.basis_string(j) + ")");
        }

    rep.record(!field_det(ring.pairing_matrix()).is_zero(), "pairing matrix is singular");

    // unit
    GradedElement one = ring.unit();
    for (size_t i = 0; i < mu; ++i) {
        GradedElement ei = ring.basis_element(i);
        GradedElement p = ring.product(one, ei);
        rep.record(p.coords == ei.coords, "unit fails on " + ring.basis_string(i));
    }

    // degree additivity on nonzero products
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) {
            GradedElement p = ring.product(ring.basis_element(i), ring.basis_element(j));
            if (p.is_zero()) continue;
            auto d = ring.element_degree(p);
            rep.record(d && *d == ring.degree(ring.basis()[i]) + ring.degree(ring.basis()[j]),
                       "degree not additive at (" + ring.basis_string(i) + ", " +
                           ring.basis_string(j) + ")");
        }

    // Frobenius property on all basis triples
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j)
            for (size_t k = 0; k < mu; ++k) {
                Scalar lhs = ring.pairing(ring.product(ring.basis_element(i), ring.basis_element(j)),
                                          ring.basis_element(k));
                Scalar rhs = ring.pairing(ring.basis_element(i),
                                          ring.product(ring.basis_element(j), ring.basis_element(k)));
                if (!(lhs == rhs))
                    rep.record(false, "Frobenius property fails at (" + ring.basis_string(i) + ", " +
                                          ring.basis_string(j) + ", " + ring.basis_string(k) + ")");
            }

    return rep;
}

}  // namespace lgb
