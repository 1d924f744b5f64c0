#include "lgb/frobenius.hpp"

#include <sstream>

namespace lgb {

std::vector<Scalar> AlgebraView::product_coords(const std::vector<Scalar>& a,
                                                const std::vector<Scalar>& b) const {
    std::vector<Scalar> out(dim, Scalar());
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar f = a[i] * b[j];
            std::vector<Scalar> row = product(i, j);
            for (size_t k = 0; k < dim; ++k)
                if (!row[k].is_zero()) out[k] += f * row[k];
        }
    }
    return out;
}

Scalar AlgebraView::pairing_coords(const std::vector<Scalar>& a,
                                   const std::vector<Scalar>& b) const {
    Scalar s;
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            s += a[i] * b[j] * pairing(i, j);
        }
    }
    return s;
}

AlgebraView view_of(const RingPtr& ring, const std::string& name) {
    AlgebraView v;
    v.name = name;
    v.dim = ring->mu();
    v.nvars = ring->vars().size();
    for (size_t i = 0; i < ring->mu(); ++i) {
        v.labels.push_back(ring->basis_string(i));
        v.degrees.push_back(ring->degree(ring->basis()[i]));
    }
    v.unit = ring->unit().coords;
    v.product = [ring](size_t i, size_t j) {
        std::vector<Scalar> out(ring->mu(), Scalar());
        for (const auto& [k, c] : ring->product_row(i, j)) out[k] = c;
        return out;
    };
    v.pairing = [ring](size_t i, size_t j) { return ring->pairing(i, j); };
    v.phase = [ring](size_t i, const GroupElement& e) {
        return act_phase(e, ring->basis()[i]);
    };
    v.hess = std::make_pair(ring->basis_index(ring->hessian_monomial()), ring->hessian_coeff());
    return v;
}

AlgebraView view_of(const ModelPtr& model, const std::string& name) {
    AlgebraView v;
    v.name = name;
    v.dim = model->dim();
    v.nvars = model->polynomial().nvars();
    for (size_t i = 0; i < model->dim(); ++i) {
        v.labels.push_back(model->label(i));
        v.degrees.push_back(model->degree(i));
    }
    v.unit.assign(model->dim(), Scalar());
    v.unit[model->unit_index()] = Scalar(Rational(1));
    v.product = [model](size_t i, size_t j) {
        const ProductEvaluation& ev = model->star(i, j);
        if (ev.result.empty()) return std::vector<Scalar>(model->dim(), Scalar());
        return ev.result;
    };
    v.pairing = [model](size_t i, size_t j) { return model->pairing(i, j); };
    v.phase = [model](size_t i, const GroupElement& e) { return model->basis_phase(i, e); };

    // Hess(W) of the untwisted polynomial, when it lies in the invariant
    // 0-sector basis
    const MilnorRing& untwisted = *model->sectors().front().ring;
    if (model->sectors().front().g.is_identity()) {
        Monomial hess_ambient = untwisted.hessian_monomial();  // sector 0 locus = everything
        if (auto idx = model->find_basis(0, hess_ambient))
            v.hess = std::make_pair(*idx, untwisted.hessian_coeff());
    }
    return v;
}

std::vector<Scalar> FrobeniusMap::apply(const std::vector<Scalar>& coords) const {
    std::vector<Scalar> out(target.dim, Scalar());
    for (size_t i = 0; i < source.dim; ++i) {
        if (coords[i].is_zero()) continue;
        for (size_t k = 0; k < target.dim; ++k)
            if (!images[i][k].is_zero()) out[k] += coords[i] * images[i][k];
    }
    return out;
}

bool FrobeniusMap::diagonal_entry(size_t i, size_t* target_index, Scalar* constant) const {
    size_t nz = 0, idx = 0;
    for (size_t k = 0; k < target.dim; ++k)
        if (!images[i][k].is_zero()) {
            ++nz;
            idx = k;
        }
    if (nz != 1) return false;
    if (target_index) *target_index = idx;
    if (constant) *constant = images[i][idx];
    return true;
}

bool FrobeniusMap::is_diagonal() const {
    std::vector<bool> hit(target.dim, false);
    for (size_t i = 0; i < source.dim; ++i) {
        size_t idx;
        if (!diagonal_entry(i, &idx, nullptr)) return false;
        if (hit[idx]) return false;
        hit[idx] = true;
    }
    return true;
}

FrobeniusMap identity_map(const RingPtr& ring) {
    FrobeniusMap f;
    f.source = view_of(ring);
    f.target = view_of(ring);
    f.source_ring = ring;
    f.target_ring = ring;
    f.images.resize(ring->mu());
    for (size_t i = 0; i < ring->mu(); ++i) {
        f.images[i].assign(ring->mu(), Scalar());
        f.images[i][i] = Scalar(Rational(1));
    }
    return f;
}

IsoCertificate verify_frobenius_iso(const FrobeniusMap& f) {
    IsoCertificate cert;
    const AlgebraView& S = f.source;
    const AlgebraView& T = f.target;

    cert.dims_equal = S.dim == T.dim;
    if (!cert.dims_equal) {
        cert.witnesses.push_back("dimension mismatch: " + std::to_string(S.dim) + " vs " +
                                 std::to_string(T.dim));
        return cert;
    }

    // bijectivity: exact rank of the image matrix
    MatS m(static_cast<int>(T.dim), static_cast<int>(S.dim));
    for (size_t i = 0; i < S.dim; ++i)
        for (size_t k = 0; k < T.dim; ++k)
            m(static_cast<int>(k), static_cast<int>(i)) = f.images[i][k];
    cert.bijective = field_rank(m) == static_cast<int>(S.dim);
    if (!cert.bijective) cert.witnesses.push_back("image matrix is rank deficient");

    // unit
    {
        std::vector<Scalar> fu = f.apply(S.unit);
        cert.unit_ok = true;
        for (size_t k = 0; k < T.dim; ++k)
            if (!(fu[k] == T.unit[k])) cert.unit_ok = false;
        if (!cert.unit_ok) cert.witnesses.push_back("f(1) != 1");
    }

    // grading
    cert.graded = true;
    for (size_t i = 0; i < S.dim; ++i)
        for (size_t k = 0; k < T.dim; ++k)
            if (!f.images[i][k].is_zero() && T.degrees[k] != S.degrees[i]) {
                cert.graded = false;
                cert.witnesses.push_back("degree not preserved on " + S.labels[i] + " -> " +
                                         T.labels[k]);
            }

    // products and pairings over all basis pairs
    cert.products_ok = true;
    cert.pairings_ok = true;
    for (size_t i = 0; i < S.dim; ++i) {
        std::vector<Scalar> ei(S.dim, Scalar()), fi = f.images[i];
        ei[i] = Scalar(Rational(1));
        for (size_t j = 0; j < S.dim; ++j) {
            std::vector<Scalar> ej(S.dim, Scalar()), fj = f.images[j];
            ej[j] = Scalar(Rational(1));

            std::vector<Scalar> lhs = f.apply(S.product(i, j));
            std::vector<Scalar> rhs = T.product_coords(fi, fj);
            for (size_t k = 0; k < T.dim; ++k)
                if (!(lhs[k] == rhs[k])) {
                    if (cert.products_ok)
                        cert.witnesses.push_back("f(ab) != f(a)f(b) at (" + S.labels[i] + ", " +
                                                 S.labels[j] + ")");
                    cert.products_ok = false;
                    break;
                }

            Scalar ps = S.pairing(i, j);
            Scalar pt = T.pairing_coords(fi, fj);
            if (!(ps == pt)) {
                if (cert.pairings_ok)
                    cert.witnesses.push_back("<f(a), f(b)> != <a, b> at (" + S.labels[i] + ", " +
                                             S.labels[j] + "): " + ps.str() + " vs " + pt.str());
                cert.pairings_ok = false;
            }
        }
    }

    // Hessian transport (exact coefficient comparison)
    if (S.hess && T.hess) {
        std::vector<Scalar> hs(S.dim, Scalar());
        hs[S.hess->first] = S.hess->second;
        std::vector<Scalar> ft = f.apply(hs);
        std::vector<Scalar> ht(T.dim, Scalar());
        ht[T.hess->first] = T.hess->second;
        bool ok = true;
        for (size_t k = 0; k < T.dim; ++k)
            if (!(ft[k] == ht[k])) ok = false;
        cert.hessian_transport = ok ? IsoCertificate::Transport::Pass : IsoCertificate::Transport::Fail;
        if (!ok)
            cert.witnesses.push_back("f(Hess) != Hess: maps to " + ft[T.hess->first].str() +
                                     " * " + T.labels[T.hess->first] + ", expected " +
                                     T.hess->second.str() + " * " + T.labels[T.hess->first]);
    }

    return cert;
}

bool is_equivariant(const FrobeniusMap& f, const SymmetryGroup& g, std::string* witness) {
    if (f.source.nvars != f.target.nvars || f.source.nvars != g.nvars())
        fail(ErrorCode::VariableMismatch, "equivariance: ambient variable counts differ");
    const std::vector<GroupElement>& checks =
        g.generators().empty() ? g.elements() : g.generators();
    for (size_t i = 0; i < f.source.dim; ++i) {
        for (const auto& e : checks) {
            Rational src_phase = f.source.phase(i, e);
            for (size_t k = 0; k < f.target.dim; ++k) {
                if (f.images[i][k].is_zero()) continue;
                Rational tgt_phase = f.target.phase(k, e);
                if (tgt_phase != src_phase) {
                    if (witness)
                        *witness = "phase of " + e.str() + " on " + f.source.labels[i] + " is " +
                                   to_string(src_phase) + " but " + to_string(tgt_phase) + " on " +
                                   f.target.labels[k];
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace lgb
