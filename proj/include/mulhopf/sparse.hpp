#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <random>

#include "mulhopf/check.hpp"

namespace mulhopf {

// A group with string-encoded elements and computable operations; supports
// infinite groups (integers, free groups) through lazy evaluation.
struct ComputableGroup {
    virtual ~ComputableGroup() = default;
    virtual std::string name() const = 0;
    virtual std::string id() const = 0;
    virtual std::string mul(const std::string& a, const std::string& b) const = 0;
    virtual std::string inv(const std::string& a) const = 0;
    virtual std::string sample(std::mt19937_64& rng) const = 0;
};

std::unique_ptr<ComputableGroup> integers_group();
std::unique_ptr<ComputableGroup> free_group_2();
std::unique_ptr<ComputableGroup> cyclic_group(std::size_t n);
// S_n with one-line-notation elements ("213" = transposition of 1,2); n ≤ 9.
std::unique_ptr<ComputableGroup> symmetric_group(std::size_t n);

// Finitely supported scalar functions on the group and on its square/cube;
// all maps drop explicit zeros.
using SparseElement = std::map<std::string, Scalar>;
using SparseTensor2 = std::map<std::array<std::string, 2>, Scalar>;
using SparseTensor3 = std::map<std::array<std::string, 3>, Scalar>;

// The function algebra of a computable group: pointwise product, counit at
// the identity, fusion maps and their inverses in closed form, and the plain
// antipode a ↦ a⁻¹ on point masses.
class SparseFunctionAlgebra {
public:
    SparseFunctionAlgebra(const ComputableGroup& g, Field k) : g_(g), k_(k) {}

    const ComputableGroup& group() const { return g_; }
    const Field& field() const { return k_; }

    SparseElement delta(const std::string& a) const;
    SparseElement mul(const SparseElement& x, const SparseElement& y) const;
    Scalar counit(const SparseElement& x) const;
    SparseElement sbar(const SparseElement& x) const;

    SparseTensor2 t1(const SparseTensor2& x) const;
    SparseTensor2 t1_inv(const SparseTensor2& x) const;
    SparseTensor2 t2(const SparseTensor2& x) const;
    SparseTensor2 t2_inv(const SparseTensor2& x) const;

private:
    const ComputableGroup& g_;
    Field k_;
};

// Seeded randomized law suite on point masses and small linear combinations:
// fusion, counits, compatibility, two-sided invertibility of the fusion
// maps, consistency of the plain antipode with them, antimultiplicativity,
// and the counit/antipode exchange. One law id per family; the witness
// carries the first failing sample.
CheckReport sparse_randomized_suite(const SparseFunctionAlgebra& a, std::uint64_t seed,
                                    std::size_t trials);

// Entrywise agreement of the sparse closed forms with the dense function
// algebra of Z_n for n in {2,3,5}: fusion maps, their inverses, product,
// counit, and plain antipode.
CheckReport sparse_window_crosscheck(Field k);

}  // namespace mulhopf
