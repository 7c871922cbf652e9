#include "mulhopf/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mulhopf {

FiniteMonoidTable cyclic_table(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic_table: order must be positive");
    FiniteMonoidTable t;
    t.name = "Z" + std::to_string(n);
    t.n = n;
    t.mul.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
    t.id = 0;
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a) inv[a] = (n - a) % n;
    t.inverse = std::move(inv);
    t.element_names.push_back("1");
    for (std::size_t a = 1; a < n; ++a)
        t.element_names.push_back(a == 1 ? "g" : "g^" + std::to_string(a));
    return t;
}

FiniteMonoidTable symmetric_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::size_t> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    FiniteMonoidTable t;
    t.name = "S" + std::to_string(n);
    t.n = perms.size();
    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(
            std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    t.mul.assign(t.n, std::vector<std::size_t>(t.n, 0));
    for (std::size_t a = 0; a < t.n; ++a)
        for (std::size_t b = 0; b < t.n; ++b) {
            std::vector<std::size_t> q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
            t.mul[a][b] = index_of(q);
        }
    t.id = 0;
    std::vector<std::size_t> inv(t.n);
    for (std::size_t a = 0; a < t.n; ++a) {
        std::vector<std::size_t> q(n);
        for (std::size_t i = 0; i < n; ++i) q[perms[a][i]] = i;
        inv[a] = index_of(q);
    }
    t.inverse = std::move(inv);
    for (const auto& perm : perms) {
        std::string s;
        for (std::size_t i : perm) s += std::to_string(i + 1);
        t.element_names.push_back(s);
    }
    return t;
}

FiniteMonoidTable idempotent_table() {
    FiniteMonoidTable t;
    t.name = "E2";
    t.n = 2;
    t.mul = {{0, 1}, {1, 1}};
    t.id = 0;
    t.element_names = {"1", "z"};
    return t;
}

namespace {

SpaceSignature algebra_space(const FiniteMonoidTable& t, bool delta_names) {
    std::vector<std::string> names;
    names.reserve(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
        std::string base = i < t.element_names.size() ? t.element_names[i] : std::to_string(i);
        names.push_back(delta_names ? "δ_" + base : base);
    }
    return SpaceSignature::simple("A", t.n, names);
}

}  // namespace

AlgebraInstance function_algebra(const FiniteMonoidTable& t, Field k) {
    const std::size_t n = t.n;
    SpaceSignature A = algebra_space(t, true);
    const Scalar one = Scalar::integer(k, 1);

    LinMap m(k, A * A, A);
    for (std::size_t a = 0; a < n; ++a) m.at(a, a * n + a) = one;

    LinMap ones(k, SpaceSignature{}, A);
    for (std::size_t a = 0; a < n; ++a) ones.at(a, 0) = one;

    LinMap h(k, A, A * A);  // comultiplication dual to the monoid law
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) h.at(x * n + y, t.mul[x][y]) = one;

    LinMap e(k, A, SpaceSignature{});
    e.at(0, t.id) = one;

    AlgebraInstance inst;
    inst.name = "function_algebra(" + t.name + "," + k.str() + ")";
    inst.bim = from_unital(Semigroup{A, m}, ones, h, e);
    // Pointwise multiplication is commutative, so the fusion maps serve as
    // their own partners in the regular structure.
    inst.regular = RegularStructure{inst.bim.t1, inst.bim.t2};
    inst.unit = ones;
    return inst;
}

AlgebraInstance group_algebra(const FiniteMonoidTable& t, Field k) {
    if (!t.inverse) throw std::invalid_argument("group_algebra: table has no inverses");
    const std::size_t n = t.n;
    SpaceSignature A = algebra_space(t, false);
    const Scalar one = Scalar::integer(k, 1);

    LinMap m(k, A * A, A);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m.at(t.mul[a][b], a * n + b) = one;

    LinMap u(k, SpaceSignature{}, A);
    u.at(t.id, 0) = one;

    LinMap h(k, A, A * A);  // diagonal comultiplication
    for (std::size_t g = 0; g < n; ++g) h.at(g * n + g, g) = one;

    LinMap e(k, A, SpaceSignature{});
    for (std::size_t a = 0; a < n; ++a) e.at(0, a) = one;

    AlgebraInstance inst;
    inst.name = "group_algebra(" + t.name + "," + k.str() + ")";
    inst.bim = from_unital(Semigroup{A, m}, u, h, e);

    LinMap t3(k, A * A, A * A);
    LinMap t4(k, A * A, A * A);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            t3.at(a * n + t.mul[b][a], a * n + b) = one;
            t4.at(t.mul[b][a] * n + b, a * n + b) = one;
        }
    inst.regular = RegularStructure{std::move(t3), std::move(t4)};
    inst.unit = u;
    return inst;
}

RegularStructures regular_structures(const AlgebraInstance& inst) {
    if (!inst.regular) throw PreconditionUnmet("instance has no regular structure");
    return RegularStructures{regular_comodule(inst.bim, *inst.regular),
                             regular_module(inst.bim, *inst.regular)};
}

}  // namespace mulhopf
