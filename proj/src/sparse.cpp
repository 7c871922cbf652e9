#include "mulhopf/sparse.hpp"

#include <functional>

#include "mulhopf/hopf.hpp"
#include "mulhopf/instances.hpp"

namespace mulhopf {

namespace {

class IntegersGroup final : public ComputableGroup {
public:
    std::string name() const override { return "integers"; }
    std::string id() const override { return "0"; }
    std::string mul(const std::string& a, const std::string& b) const override {
        return std::to_string(std::stoll(a) + std::stoll(b));
    }
    std::string inv(const std::string& a) const override {
        return std::to_string(-std::stoll(a));
    }
    std::string sample(std::mt19937_64& rng) const override {
        return std::to_string(static_cast<long long>(rng() % 101) - 50);
    }
};

// Reduced words over a, b with capital letters as inverses.
class FreeGroup2 final : public ComputableGroup {
public:
    std::string name() const override { return "free2"; }
    std::string id() const override { return ""; }
    std::string mul(const std::string& a, const std::string& b) const override {
        std::string w = a;
        for (char c : b) {
            if (!w.empty() && w.back() == flip(c))
                w.pop_back();
            else
                w.push_back(c);
        }
        return w;
    }
    std::string inv(const std::string& a) const override {
        std::string w;
        for (auto it = a.rbegin(); it != a.rend(); ++it) w.push_back(flip(*it));
        return w;
    }
    std::string sample(std::mt19937_64& rng) const override {
        static const char letters[4] = {'a', 'b', 'A', 'B'};
        std::string w;
        const std::size_t len = rng() % 7;
        for (std::size_t i = 0; i < len; ++i) {
            char c = letters[rng() % 4];
            if (!w.empty() && w.back() == flip(c))
                w.pop_back();
            else
                w.push_back(c);
        }
        return w;
    }

private:
    static char flip(char c) {
        if (c >= 'a') return static_cast<char>(c - ('a' - 'A'));
        return static_cast<char>(c + ('a' - 'A'));
    }
};

class CyclicGroup final : public ComputableGroup {
public:
    explicit CyclicGroup(std::size_t n) : n_(n) {}
    std::string name() const override { return "cyclic" + std::to_string(n_); }
    std::string id() const override { return "0"; }
    std::string mul(const std::string& a, const std::string& b) const override {
        return std::to_string((std::stoull(a) + std::stoull(b)) % n_);
    }
    std::string inv(const std::string& a) const override {
        return std::to_string((n_ - std::stoull(a) % n_) % n_);
    }
    std::string sample(std::mt19937_64& rng) const override {
        return std::to_string(rng() % n_);
    }

private:
    std::size_t n_;
};

// One-line notation: element "213" sends 1↦2, 2↦1, 3↦3.
class SymmetricGroup final : public ComputableGroup {
public:
    explicit SymmetricGroup(std::size_t n) : n_(n) {
        if (n_ == 0 || n_ > 9)
            throw PreconditionUnmet("symmetric_group: order must lie in 1..9");
    }
    std::string name() const override { return "symmetric" + std::to_string(n_); }
    std::string id() const override {
        std::string s;
        for (std::size_t i = 1; i <= n_; ++i) s.push_back(static_cast<char>('0' + i));
        return s;
    }
    std::string mul(const std::string& a, const std::string& b) const override {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            s[i] = a[static_cast<std::size_t>(b[i] - '1')];
        return s;
    }
    std::string inv(const std::string& a) const override {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            s[static_cast<std::size_t>(a[i] - '1')] = static_cast<char>('1' + i);
        return s;
    }
    std::string sample(std::mt19937_64& rng) const override {
        std::string s = id();
        for (std::size_t i = n_; i > 1; --i)
            std::swap(s[i - 1], s[rng() % i]);
        return s;
    }

private:
    std::size_t n_;
};

void add_term(SparseElement& x, const std::string& g, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = x.find(g);
    if (it == x.end()) {
        x.emplace(g, s);
        return;
    }
    it->second = it->second + s;
    if (it->second.is_zero()) x.erase(it);
}

void add_term2(SparseTensor2& x, std::array<std::string, 2> g, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = x.find(g);
    if (it == x.end()) {
        x.emplace(std::move(g), s);
        return;
    }
    it->second = it->second + s;
    if (it->second.is_zero()) x.erase(it);
}

void add_term3(SparseTensor3& x, std::array<std::string, 3> g, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = x.find(g);
    if (it == x.end()) {
        x.emplace(std::move(g), s);
        return;
    }
    it->second = it->second + s;
    if (it->second.is_zero()) x.erase(it);
}

using PairOp = std::function<SparseTensor2(const std::string&, const std::string&)>;

SparseTensor2 apply_pair(const PairOp& op, const SparseTensor2& x) {
    SparseTensor2 out;
    for (const auto& [key, coeff] : x)
        for (const auto& [img, s] : op(key[0], key[1])) add_term2(out, img, coeff * s);
    return out;
}

// Applies a two-leg operation on legs (1,2) or (2,3) of a three-leg tensor.
SparseTensor3 apply_legs12(const PairOp& op, const SparseTensor3& x) {
    SparseTensor3 out;
    for (const auto& [key, coeff] : x)
        for (const auto& [img, s] : op(key[0], key[1]))
            add_term3(out, {img[0], img[1], key[2]}, coeff * s);
    return out;
}

SparseTensor3 apply_legs23(const PairOp& op, const SparseTensor3& x) {
    SparseTensor3 out;
    for (const auto& [key, coeff] : x)
        for (const auto& [img, s] : op(key[1], key[2]))
            add_term3(out, {key[0], img[0], img[1]}, coeff * s);
    return out;
}

SparseTensor3 swap_legs12(const SparseTensor3& x) {
    SparseTensor3 out;
    for (const auto& [key, coeff] : x) add_term3(out, {key[1], key[0], key[2]}, coeff);
    return out;
}

bool equal3(const SparseTensor3& a, const SparseTensor3& b) { return a == b; }
bool equal2(const SparseTensor2& a, const SparseTensor2& b) { return a == b; }

std::string show3(const SparseTensor3& x) {
    std::string s;
    for (const auto& [key, coeff] : x) {
        if (!s.empty()) s += " + ";
        s += coeff.str() + "·δ_" + key[0] + "⊗δ_" + key[1] + "⊗δ_" + key[2];
    }
    return s.empty() ? "0" : s;
}

Scalar random_scalar(Field k, std::mt19937_64& rng) {
    if (k.kind == FieldKind::rational) {
        long long num = static_cast<long long>(rng() % 11) - 5;
        long long den = static_cast<long long>(rng() % 4) + 1;
        return Scalar::parse(k, std::to_string(num) + "/" + std::to_string(den));
    }
    return Scalar::integer(k, static_cast<long long>(rng() % k.p));
}

}  // namespace

std::unique_ptr<ComputableGroup> integers_group() { return std::make_unique<IntegersGroup>(); }
std::unique_ptr<ComputableGroup> free_group_2() { return std::make_unique<FreeGroup2>(); }
std::unique_ptr<ComputableGroup> cyclic_group(std::size_t n) {
    return std::make_unique<CyclicGroup>(n);
}
std::unique_ptr<ComputableGroup> symmetric_group(std::size_t n) {
    return std::make_unique<SymmetricGroup>(n);
}

SparseElement SparseFunctionAlgebra::delta(const std::string& a) const {
    SparseElement x;
    x.emplace(a, Scalar::integer(k_, 1));
    return x;
}

SparseElement SparseFunctionAlgebra::mul(const SparseElement& x, const SparseElement& y) const {
    SparseElement out;
    for (const auto& [g, s] : x) {
        auto it = y.find(g);
        if (it != y.end()) add_term(out, g, s * it->second);
    }
    return out;
}

Scalar SparseFunctionAlgebra::counit(const SparseElement& x) const {
    auto it = x.find(g_.id());
    return it == x.end() ? Scalar::integer(k_, 0) : it->second;
}

SparseElement SparseFunctionAlgebra::sbar(const SparseElement& x) const {
    SparseElement out;
    for (const auto& [g, s] : x) add_term(out, g_.inv(g), s);
    return out;
}

SparseTensor2 SparseFunctionAlgebra::t1(const SparseTensor2& x) const {
    SparseTensor2 out;
    for (const auto& [key, s] : x) add_term2(out, {g_.mul(key[0], g_.inv(key[1])), key[1]}, s);
    return out;
}

SparseTensor2 SparseFunctionAlgebra::t1_inv(const SparseTensor2& x) const {
    SparseTensor2 out;
    for (const auto& [key, s] : x) add_term2(out, {g_.mul(key[0], key[1]), key[1]}, s);
    return out;
}

SparseTensor2 SparseFunctionAlgebra::t2(const SparseTensor2& x) const {
    SparseTensor2 out;
    for (const auto& [key, s] : x) add_term2(out, {key[0], g_.mul(g_.inv(key[0]), key[1])}, s);
    return out;
}

SparseTensor2 SparseFunctionAlgebra::t2_inv(const SparseTensor2& x) const {
    SparseTensor2 out;
    for (const auto& [key, s] : x) add_term2(out, {key[0], g_.mul(key[0], key[1])}, s);
    return out;
}

CheckReport sparse_randomized_suite(const SparseFunctionAlgebra& a, std::uint64_t seed,
                                    std::size_t trials) {
    CheckReport report;
    const Field k = a.field();
    const ComputableGroup& g = a.group();
    std::mt19937_64 rng(seed);

    PairOp op_t1 = [&](const std::string& x, const std::string& y) {
        SparseTensor2 t;
        t.emplace(std::array<std::string, 2>{x, y}, Scalar::integer(k, 1));
        return a.t1(t);
    };
    PairOp op_t2 = [&](const std::string& x, const std::string& y) {
        SparseTensor2 t;
        t.emplace(std::array<std::string, 2>{x, y}, Scalar::integer(k, 1));
        return a.t2(t);
    };

    struct Fam {
        const char* id;
        bool ok = true;
        std::string witness;
    };
    Fam fusion1{"sparse.mbm_ax_1.fusion"};
    Fam fusion2{"sparse.mbm_ax_2.fusion"};
    Fam counit1{"sparse.mbm_ax_1.counit"};
    Fam counit2{"sparse.mbm_ax_2.counit"};
    Fam compat{"sparse.mbm_ax_compatibility"};
    Fam inv1{"sparse.t1.invertible"};
    Fam inv2{"sparse.t2.invertible"};
    Fam sb_inv{"sparse.sbar.involutive"};
    Fam sb_counit{"sparse.sbar.counit"};
    Fam sb_antimul{"sparse.sbar.antimultiplicative"};
    Fam sb_s1{"sparse.sbar.s1_consistent"};
    Fam sb_s2{"sparse.sbar.s2_consistent"};

    auto note = [](Fam& f, bool ok, const std::string& w) {
        if (!ok && f.ok) {
            f.ok = false;
            f.witness = w;
        }
    };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        // A random 1-to-2 term combination on each leg triple.
        SparseTensor3 x;
        const std::size_t terms = 1 + rng() % 2;
        for (std::size_t t = 0; t < terms; ++t) {
            Scalar coeff = random_scalar(k, rng);
            if (coeff.is_zero()) coeff = Scalar::integer(k, 1);
            add_term3(x, {g.sample(rng), g.sample(rng), g.sample(rng)}, coeff);
        }
        const std::string wtag = "sample " + show3(x);

        // Fusion of t1: (t1⊗1)(c⊗1)(1⊗t1)(c⊗1)(1⊗t1) = (1⊗t1)(t1⊗1).
        {
            SparseTensor3 lhs = apply_legs12(
                op_t1, swap_legs12(apply_legs23(op_t1, swap_legs12(apply_legs23(op_t1, x)))));
            SparseTensor3 rhs = apply_legs23(op_t1, apply_legs12(op_t1, x));
            note(fusion1, equal3(lhs, rhs), wtag);
        }
        // Fusion of t2: (1⊗t2)(1⊗c)... mirrored on the right legs.
        {
            auto swap23 = [](const SparseTensor3& v) {
                SparseTensor3 out;
                for (const auto& [key, coeff] : v) add_term3(out, {key[0], key[2], key[1]}, coeff);
                return out;
            };
            SparseTensor3 lhs = apply_legs23(
                op_t2, swap23(apply_legs12(op_t2, swap23(apply_legs12(op_t2, x)))));
            SparseTensor3 rhs = apply_legs12(op_t2, apply_legs23(op_t2, x));
            note(fusion2, equal3(lhs, rhs), wtag);
        }
        // Compatibility: (1⊗t1)(t2⊗1) = (t2⊗1)(1⊗t1).
        {
            SparseTensor3 lhs = apply_legs23(op_t1, apply_legs12(op_t2, x));
            SparseTensor3 rhs = apply_legs12(op_t2, apply_legs23(op_t1, x));
            note(compat, equal3(lhs, rhs), wtag);
        }

        // Two-leg checks on the first two legs of the sample.
        SparseTensor2 p;
        for (const auto& [key, coeff] : x) add_term2(p, {key[0], key[1]}, coeff);

        {
            // Counits: applying e to the inert leg of t1/t2 collapses to the
            // plain counit on that leg.
            SparseElement lhs1, rhs1, lhs2, rhs2;
            for (const auto& [key, coeff] : a.t1(p)) {
                auto it = key;
                if (it[1] == g.id()) add_term(lhs1, it[0], coeff);
            }
            for (const auto& [key, coeff] : p)
                if (key[1] == g.id()) add_term(rhs1, key[0], coeff);
            note(counit1, lhs1 == rhs1, wtag);
            for (const auto& [key, coeff] : a.t2(p))
                if (key[0] == g.id()) add_term(lhs2, key[1], coeff);
            for (const auto& [key, coeff] : p)
                if (key[0] == g.id()) add_term(rhs2, key[1], coeff);
            note(counit2, lhs2 == rhs2, wtag);
        }

        note(inv1, equal2(a.t1_inv(a.t1(p)), p) && equal2(a.t1(a.t1_inv(p)), p), wtag);
        note(inv2, equal2(a.t2_inv(a.t2(p)), p) && equal2(a.t2(a.t2_inv(p)), p), wtag);

        // Plain antipode laws on the first leg pair.
        SparseElement u, v;
        for (const auto& [key, coeff] : p) add_term(u, key[0], coeff);
        for (const auto& [key, coeff] : p) add_term(v, key[1], coeff);
        note(sb_inv, a.sbar(a.sbar(u)) == u, wtag);
        note(sb_counit, a.counit(a.sbar(u)) == a.counit(u), wtag);
        note(sb_antimul, a.sbar(a.mul(u, v)) == a.mul(a.sbar(v), a.sbar(u)), wtag);

        // s1 = (e⊗1)∘t1⁻¹ agrees with multiplication by the antipode image,
        // and likewise s2 = (1⊗e)∘t2⁻¹.
        {
            SparseElement s1a, s1b, s2a, s2b;
            for (const auto& [key, coeff] : a.t1_inv(p))
                if (key[0] == g.id()) add_term(s1a, key[1], coeff);
            for (const auto& [key, coeff] : p) {
                // sbar(δ_x)·δ_y is δ_y when y = x⁻¹.
                if (g.inv(key[0]) == key[1]) add_term(s1b, key[1], coeff);
            }
            note(sb_s1, s1a == s1b, wtag);
            for (const auto& [key, coeff] : a.t2_inv(p))
                if (key[1] == g.id()) add_term(s2a, key[0], coeff);
            for (const auto& [key, coeff] : p)
                if (g.inv(key[1]) == key[0]) add_term(s2b, key[0], coeff);
            note(sb_s2, s2a == s2b, wtag);
        }
    }

    for (const Fam* f : {&fusion1, &counit1, &fusion2, &counit2, &compat, &inv1, &inv2, &sb_inv,
                         &sb_counit, &sb_antimul, &sb_s1, &sb_s2})
        report.law_true(f->id, f->ok, f->witness);
    return report;
}

CheckReport sparse_window_crosscheck(Field k) {
    CheckReport report;
    for (std::size_t n : {2ul, 3ul, 5ul}) {
        auto cg = cyclic_group(n);
        SparseFunctionAlgebra sparse(*cg, k);
        AlgebraInstance dense = function_algebra(cyclic_table(n), k);
        const LinMap& t1 = dense.bim.t1;
        const LinMap& t2 = dense.bim.t2;
        LinMap t1i = inverse(t1);
        LinMap t2i = inverse(t2);
        const LinMap& e = dense.bim.e;
        const LinMap m = induced_multiplication(dense.bim).m;

        HopfCheck hc = check_hopf(dense.bim);
        PrimedAntipode sp = compute_s_prime(dense.bim, *dense.regular);
        PlainAntipode pa = extract_sbar(dense.bim, *hc.antipode, sp, dense.unit);

        bool ok = true;
        std::string witness;
        auto column_matches = [&](const LinMap& mat, std::size_t col,
                                  const SparseTensor2& img) {
            for (std::size_t r = 0; r < mat.rows(); ++r) {
                std::array<std::string, 2> key{std::to_string(r / n), std::to_string(r % n)};
                auto it = img.find(key);
                Scalar want =
                    it == img.end() ? Scalar::integer(mat.field(), 0) : it->second;
                if (!(mat.at(r, col) == want)) return false;
            }
            return true;
        };
        for (std::size_t aa = 0; aa < n && ok; ++aa)
            for (std::size_t bb = 0; bb < n && ok; ++bb) {
                SparseTensor2 basis;
                basis.emplace(
                    std::array<std::string, 2>{std::to_string(aa), std::to_string(bb)},
                    Scalar::integer(k, 1));
                const std::size_t col = aa * n + bb;
                if (!column_matches(t1, col, sparse.t1(basis)) ||
                    !column_matches(t2, col, sparse.t2(basis)) ||
                    !column_matches(t1i, col, sparse.t1_inv(basis)) ||
                    !column_matches(t2i, col, sparse.t2_inv(basis))) {
                    ok = false;
                    witness = "fusion mismatch at (" + std::to_string(aa) + "," +
                              std::to_string(bb) + ")";
                }
                // Pointwise product of the two point masses.
                SparseElement prod =
                    sparse.mul(sparse.delta(std::to_string(aa)), sparse.delta(std::to_string(bb)));
                for (std::size_t r = 0; r < n && ok; ++r) {
                    auto it = prod.find(std::to_string(r));
                    Scalar want = it == prod.end() ? Scalar::integer(k, 0) : it->second;
                    if (!(m.at(r, col) == want)) {
                        ok = false;
                        witness = "product mismatch at (" + std::to_string(aa) + "," +
                                  std::to_string(bb) + ")";
                    }
                }
            }
        for (std::size_t aa = 0; aa < n && ok; ++aa) {
            if (!(e.at(0, aa) == sparse.counit(sparse.delta(std::to_string(aa))))) {
                ok = false;
                witness = "counit mismatch at " + std::to_string(aa);
            }
            SparseElement sb = sparse.sbar(sparse.delta(std::to_string(aa)));
            for (std::size_t r = 0; r < n && ok; ++r) {
                auto it = sb.find(std::to_string(r));
                Scalar want = it == sb.end() ? Scalar::integer(k, 0) : it->second;
                if (!(pa.sbar.at(r, aa) == want)) {
                    ok = false;
                    witness = "antipode mismatch at " + std::to_string(aa);
                }
            }
        }
        report.law_true("sparse.window.z" + std::to_string(n), ok, witness);
    }
    return report;
}

}  // namespace mulhopf
