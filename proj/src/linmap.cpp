#include "mulhopf/linmap.hpp"

#include <utility>

namespace mulhopf {

SpaceSignature SpaceSignature::simple(std::string label, std::size_t dim,
                                      std::vector<std::string> names) {
    return SpaceSignature(Factor{std::move(label), dim, std::move(names)});
}

std::size_t SpaceSignature::total() const {
    std::size_t n = 1;
    for (const auto& f : factors) n *= f.dim;
    return n;
}

SpaceSignature SpaceSignature::operator*(const SpaceSignature& o) const {
    SpaceSignature s = *this;
    s.factors.insert(s.factors.end(), o.factors.begin(), o.factors.end());
    return s;
}

std::string SpaceSignature::str() const {
    if (factors.empty()) return "I";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "⊗";
        s += factors[i].label;
    }
    return s;
}

std::string SpaceSignature::basis_name(std::size_t index) const {
    if (factors.empty()) return "1";
    std::string s;
    // Leftmost factor most significant: peel strides right to left.
    std::vector<std::size_t> parts(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
        parts[k] = index % factors[k].dim;
        index /= factors[k].dim;
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) s += "⊗";
        const auto& f = factors[k];
        s += parts[k] < f.names.size() ? f.names[parts[k]]
                                       : f.label + "[" + std::to_string(parts[k]) + "]";
    }
    return s;
}

LinMap::LinMap(Field f, SpaceSignature dom, SpaceSignature cod)
    : fld_(f), dom_(std::move(dom)), cod_(std::move(cod)) {
    rows_ = cod_.total();
    cols_ = dom_.total();
    a_.assign(rows_ * cols_, Scalar(fld_));
}

bool LinMap::entries_equal(const LinMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(fld_ == o.fld_)) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

bool LinMap::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

LinMap LinMap::operator+(const LinMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw SignatureMismatch("LinMap+: shape mismatch");
    LinMap r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

LinMap LinMap::operator-(const LinMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw SignatureMismatch("LinMap-: shape mismatch");
    LinMap r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

std::string LinMap::str() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) s += ",";
        s += "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) s += ",";
            s += at(r, c).str();
        }
        s += "]";
    }
    return s + "]";
}

LinMap identity(Field f, const SpaceSignature& s) {
    LinMap m(f, s, s);
    const Scalar one = Scalar::integer(f, 1);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = one;
    return m;
}

LinMap zero_map(Field f, const SpaceSignature& dom, const SpaceSignature& cod) {
    return LinMap(f, dom, cod);
}

LinMap compose(const LinMap& g, const LinMap& f) {
    if (g.cols() != f.rows())
        throw SignatureMismatch("compose: dom(g) " + g.dom().str() + " (dim " +
                                std::to_string(g.cols()) + ") vs cod(f) " + f.cod().str() +
                                " (dim " + std::to_string(f.rows()) + ")");
    if (!(g.field() == f.field())) throw SignatureMismatch("compose: mixed fields");
    LinMap h(f.field(), f.dom(), g.cod());
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (std::size_t k = 0; k < f.rows(); ++k) {
            const Scalar& s = f.at(k, j);
            if (s.is_zero()) continue;
            for (std::size_t i = 0; i < g.rows(); ++i) {
                const Scalar& t = g.at(i, k);
                if (t.is_zero()) continue;
                h.at(i, j) = h.at(i, j) + t * s;
            }
        }
    return h;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
    if (!(g.field() == f.field())) throw SignatureMismatch("tensor: mixed fields");
    LinMap h(f.field(), f.dom() * g.dom(), f.cod() * g.cod());
    for (std::size_t cf = 0; cf < f.cols(); ++cf)
        for (std::size_t rf = 0; rf < f.rows(); ++rf) {
            const Scalar& s = f.at(rf, cf);
            if (s.is_zero()) continue;
            for (std::size_t cg = 0; cg < g.cols(); ++cg)
                for (std::size_t rg = 0; rg < g.rows(); ++rg) {
                    const Scalar& t = g.at(rg, cg);
                    if (t.is_zero()) continue;
                    h.at(rf * g.rows() + rg, cf * g.cols() + cg) = s * t;
                }
        }
    return h;
}

LinMap braiding(Field f, const SpaceSignature& a, const SpaceSignature& b) {
    const std::size_t da = a.total(), db = b.total();
    LinMap m(f, a * b, b * a);
    const Scalar one = Scalar::integer(f, 1);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            m.at(j * da + i, i * db + j) = one;
    return m;
}

LinMap transpose(const LinMap& f, SpaceSignature dom, SpaceSignature cod) {
    if (dom.total() != f.rows() || cod.total() != f.cols())
        throw SignatureMismatch("transpose: signature totals do not match");
    LinMap t(f.field(), std::move(dom), std::move(cod));
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) t.at(c, r) = f.at(r, c);
    return t;
}

namespace {

// Reduced row echelon form with the deterministic pivot rule: scan columns
// left to right, take the topmost available row. Forward pass is Bareiss
// fraction-free (exact division), then an exact normalization pass.
struct Rref {
    std::vector<std::vector<Scalar>> w;  // row-major working rows
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;
};

Rref rref_of(const LinMap& m, const LinMap* aug) {
    const Field f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols() + (aug ? aug->cols() : 0);
    Rref e;
    e.cols = cols;
    e.w.assign(rows, std::vector<Scalar>(cols, Scalar(f)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) e.w[r][c] = m.at(r, c);
        if (aug)
            for (std::size_t c = 0; c < aug->cols(); ++c)
                e.w[r][m.cols() + c] = aug->at(r, c);
    }

    // Pivot search continues into the augmented block: a pivot landing there
    // is exactly an inconsistent system, which solve_linear must detect.
    Scalar prev = Scalar::integer(f, 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv_row = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!e.w[i][c].is_zero()) {
                piv_row = i;
                break;
            }
        if (piv_row == rows) continue;
        std::swap(e.w[r], e.w[piv_row]);
        const Scalar piv = e.w[r][c];
        const bool plain = piv == prev;  // scaling factor piv/prev is 1
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar head = e.w[i][c];
            if (head.is_zero()) {
                if (plain) continue;
                for (std::size_t j = c; j < cols; ++j)
                    if (!e.w[i][j].is_zero()) e.w[i][j] = piv * e.w[i][j] / prev;
                continue;
            }
            for (std::size_t j = c; j < cols; ++j)
                e.w[i][j] = (piv * e.w[i][j] - head * e.w[r][j]) / prev;
        }
        prev = piv;
        e.pivot_cols.push_back(c);
        ++r;
    }

    // Normalize to reduced form (pivots 1, zeros above) with exact division.
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        const std::size_t pc = e.pivot_cols[k];
        const Scalar pk = e.w[k][pc];
        for (std::size_t j = pc; j < cols; ++j)
            if (!e.w[k][j].is_zero()) e.w[k][j] = e.w[k][j] / pk;
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar fct = e.w[i][pc];
            if (fct.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j)
                if (!e.w[k][j].is_zero()) e.w[i][j] = e.w[i][j] - fct * e.w[k][j];
        }
    }
    return e;
}

}  // namespace

std::size_t rank(const LinMap& f) { return rref_of(f, nullptr).pivot_cols.size(); }

bool is_surjective(const LinMap& f) { return rank(f) == f.rows(); }

bool is_injective(const LinMap& f) { return rank(f) == f.cols(); }

std::vector<LinMap> kernel_basis(const LinMap& f) {
    const Rref e = rref_of(f, nullptr);
    std::vector<LinMap> basis;
    const Scalar one = Scalar::integer(f.field(), 1);
    std::size_t k = 0;  // index into pivot_cols
    for (std::size_t c = 0; c < f.cols(); ++c) {
        if (k < e.pivot_cols.size() && e.pivot_cols[k] == c) {
            ++k;
            continue;
        }
        LinMap v(f.field(), SpaceSignature::unit(), f.dom());
        v.at(c, 0) = one;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v.at(e.pivot_cols[r], 0) = -e.w[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

ImageFactorization image_factorization(const LinMap& f, const std::string& image_label) {
    const Rref e = rref_of(f, nullptr);
    const std::size_t rk = e.pivot_cols.size();
    ImageFactorization out;
    out.pivot_columns = e.pivot_cols;
    out.image = SpaceSignature::simple(image_label, rk);
    out.include = LinMap(f.field(), out.image, f.cod());
    for (std::size_t k = 0; k < rk; ++k)
        for (std::size_t r = 0; r < f.rows(); ++r)
            out.include.at(r, k) = f.at(r, e.pivot_cols[k]);
    // In reduced form, column j of f expands over the pivot columns with the
    // coefficients sitting in rows 0..rk-1, so those rows are the projection.
    out.project = LinMap(f.field(), f.dom(), out.image);
    for (std::size_t c = 0; c < f.cols(); ++c)
        for (std::size_t k = 0; k < rk; ++k) out.project.at(k, c) = e.w[k][c];
    return out;
}

std::optional<LinMap> solve_linear(const LinMap& m, const LinMap& b) {
    if (m.rows() != b.rows()) throw SignatureMismatch("solve_linear: row mismatch");
    const Rref e = rref_of(m, &b);
    for (std::size_t c : e.pivot_cols)
        if (c >= m.cols()) return std::nullopt;  // pivot in augmented block
    LinMap x(m.field(), b.dom(), m.dom());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivot_cols[k], j) = e.w[k][m.cols() + j];
    return x;
}

LinMap right_section(const LinMap& f) {
    auto x = solve_linear(f, identity(f.field(), f.cod()));
    if (!x)
        throw NotSurjective("right_section: rank " + std::to_string(rank(f)) + " < " +
                            std::to_string(f.rows()) + " for " + f.dom().str() + " -> " +
                            f.cod().str());
    return *x;
}

LinMap solve_through_epi(const LinMap& target, const LinMap& epi) {
    if (target.cols() != epi.cols())
        throw SignatureMismatch("solve_through_epi: domains differ");
    LinMap u = compose(target, right_section(epi));
    if (!compose(u, epi).entries_equal(target))
        throw NotWellDefined("solve_through_epi: target does not factor through " +
                             epi.dom().str() + " -> " + epi.cod().str());
    return u;
}

LinMap inverse(const LinMap& f) {
    if (f.rows() != f.cols()) throw NotInvertible("inverse: non-square map");
    auto x = solve_linear(f, identity(f.field(), f.cod()));
    if (!x) {
        auto ker = kernel_basis(f);
        throw NotInvertible("inverse: kernel contains " +
                            (ker.empty() ? std::string("(none)")
                                         : render_vector(f.dom(), ker.front())));
    }
    return *x;
}

std::string render_vector(const SpaceSignature& sig, const LinMap& column) {
    std::string s;
    for (std::size_t i = 0; i < column.rows(); ++i) {
        const Scalar& c = column.at(i, 0);
        if (c.is_zero()) continue;
        const std::string name = sig.basis_name(i);
        if (s.empty()) {
            if (c.is_one()) s = name;
            else if ((-c).is_one()) s = "-" + name;
            else s = c.str() + "·" + name;
        } else {
            // Over Q render subtraction; prime residues are never "negative".
            if (c.is_one()) s += " + " + name;
            else if (c.field().kind == FieldKind::rational && (-c).is_one()) s += " - " + name;
            else s += " + " + c.str() + "·" + name;
        }
    }
    return s.empty() ? "0" : s;
}

Duality make_duality(Field f, const SpaceSignature& v) {
    if (v.factors.empty()) {
        Duality d;
        d.space = v;
        d.dual = v;
        d.eta = identity(f, SpaceSignature::unit());
        d.eps = identity(f, SpaceSignature::unit());
        return d;
    }
    if (v.factors.size() > 1) {
        SpaceSignature head(v.factors.front());
        SpaceSignature tail;
        tail.factors.assign(v.factors.begin() + 1, v.factors.end());
        return tensor_duality(make_duality(f, head), make_duality(f, tail));
    }
    const Factor& fac = v.factors.front();
    Factor dual_fac{fac.label + "*", fac.dim, {}};
    dual_fac.names.reserve(fac.names.size());
    for (const auto& n : fac.names) dual_fac.names.push_back(n + "*");
    Duality d;
    d.space = v;
    d.dual = SpaceSignature(dual_fac);
    const std::size_t n = fac.dim;
    d.eta = LinMap(f, SpaceSignature::unit(), d.space * d.dual);
    d.eps = LinMap(f, d.dual * d.space, SpaceSignature::unit());
    const Scalar one = Scalar::integer(f, 1);
    for (std::size_t i = 0; i < n; ++i) {
        d.eta.at(i * n + i, 0) = one;
        d.eps.at(0, i * n + i) = one;
    }
    return d;
}

Duality reverse_duality(const Duality& d) {
    const Field f = d.eta.field();
    Duality r;
    r.space = d.dual;
    r.dual = d.space;
    r.eta = compose(braiding(f, d.space, d.dual), d.eta);
    r.eps = compose(d.eps, braiding(f, d.space, d.dual));
    return r;
}

Duality tensor_duality(const Duality& dv, const Duality& dw) {
    const Field f = dv.eta.field();
    Duality t;
    t.space = dv.space * dw.space;
    t.dual = dw.dual * dv.dual;
    t.eta = compose(tensor(identity(f, dv.space), dw.eta, identity(f, dv.dual)), dv.eta);
    t.eps = compose(dw.eps, tensor(identity(f, dw.dual), dv.eps, identity(f, dw.space)));
    return t;
}

}  // namespace mulhopf
