#pragma once

#include <cstddef>
#include <vector>

#include "mulhopf/instances.hpp"

namespace mulhopf::testutil {

// Row-major integer literal; rows.size() == total(cod), rows[r].size() == total(dom).
inline LinMap from_rows(Field k, const SpaceSignature& dom, const SpaceSignature& cod,
                        const std::vector<std::vector<long long>>& rows) {
    LinMap f = zero_map(k, dom, cod);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            f.at(r, c) = Scalar::integer(k, rows[r][c]);
    return f;
}

// Column c carries a single 1 in row row_of_col[c].
inline LinMap permutation_map(Field k, const SpaceSignature& dom, const SpaceSignature& cod,
                              const std::vector<std::size_t>& row_of_col) {
    LinMap f = zero_map(k, dom, cod);
    for (std::size_t c = 0; c < row_of_col.size(); ++c)
        f.at(row_of_col[c], c) = Scalar::integer(k, 1);
    return f;
}

inline LinMap column(Field k, const SpaceSignature& cod, const std::vector<long long>& v) {
    LinMap f = zero_map(k, SpaceSignature{}, cod);
    for (std::size_t r = 0; r < v.size(); ++r) f.at(r, 0) = Scalar::integer(k, v[r]);
    return f;
}

inline Scalar sc(Field k, long long n) { return Scalar::integer(k, n); }

// t1(delta_a ⊗ delta_b) = delta_{a b^{-1}} ⊗ delta_b on functions over a finite group.
inline LinMap function_t1_oracle(Field k, const FiniteMonoidTable& t, const SpaceSignature& AA) {
    const std::size_t n = t.n;
    LinMap f = zero_map(k, AA, AA);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            f.at(t.mul[a][(*t.inverse)[b]] * n + b, a * n + b) = Scalar::integer(k, 1);
    return f;
}

// t2(delta_a ⊗ delta_b) = delta_a ⊗ delta_{a^{-1} b}.
inline LinMap function_t2_oracle(Field k, const FiniteMonoidTable& t, const SpaceSignature& AA) {
    const std::size_t n = t.n;
    LinMap f = zero_map(k, AA, AA);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            f.at(a * n + t.mul[(*t.inverse)[a]][b], a * n + b) = Scalar::integer(k, 1);
    return f;
}

// Group algebra: t1(g ⊗ h) = g ⊗ gh, t2(y ⊗ a) = ya ⊗ a,
// t3(a ⊗ b) = a ⊗ ba, t4(a ⊗ b) = ba ⊗ b.
inline LinMap group_t_oracle(Field k, const FiniteMonoidTable& t, const SpaceSignature& AA,
                             int which) {
    const std::size_t n = t.n;
    LinMap f = zero_map(k, AA, AA);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t row = 0;
            switch (which) {
                case 1: row = a * n + t.mul[a][b]; break;
                case 2: row = t.mul[a][b] * n + b; break;
                case 3: row = a * n + t.mul[b][a]; break;
                case 4: row = t.mul[b][a] * n + b; break;
            }
            f.at(row, a * n + b) = Scalar::integer(k, 1);
        }
    return f;
}

// sbar(delta_a) = delta_{a^{-1}} (function algebra) and sbar(g) = g^{-1} (group
// algebra) are the same permutation of the canonical basis.
inline LinMap inversion_oracle(Field k, const FiniteMonoidTable& t, const SpaceSignature& A) {
    std::vector<std::size_t> img(t.n);
    for (std::size_t a = 0; a < t.n; ++a) img[a] = (*t.inverse)[a];
    return permutation_map(k, A, A, img);
}

}  // namespace mulhopf::testutil
