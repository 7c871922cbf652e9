#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mulhopf/scalar.hpp"

namespace mulhopf {

struct SignatureMismatch : std::runtime_error {
    explicit SignatureMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct NotSurjective : std::runtime_error {
    explicit NotSurjective(const std::string& m) : std::runtime_error(m) {}
};
struct NotWellDefined : std::runtime_error {
    explicit NotWellDefined(const std::string& m) : std::runtime_error(m) {}
};
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& m) : std::runtime_error(m) {}
};
struct Inconsistent : std::runtime_error {
    explicit Inconsistent(const std::string& m) : std::runtime_error(m) {}
};
struct PreconditionUnmet : std::runtime_error {
    explicit PreconditionUnmet(const std::string& m) : std::runtime_error(m) {}
};

// One tensor factor of a space. `names` optionally labels the basis vectors
// (used for witness rendering); when empty, vectors render as label[i].
struct Factor {
    std::string label;
    std::size_t dim = 0;
    std::vector<std::string> names;
};

// Ordered list of tensor factors; the empty list is the monoidal unit I.
// Basis order is lexicographic with the leftmost factor most significant.
struct SpaceSignature {
    std::vector<Factor> factors;

    SpaceSignature() = default;
    explicit SpaceSignature(Factor f) : factors{std::move(f)} {}

    static SpaceSignature unit() { return SpaceSignature{}; }
    static SpaceSignature simple(std::string label, std::size_t dim,
                                 std::vector<std::string> names = {});

    std::size_t total() const;
    // Concatenates factor lists; total dims multiply.
    SpaceSignature operator*(const SpaceSignature& o) const;
    std::string str() const;
    // Renders basis vector `index` as a ⊗-joined list of factor names.
    std::string basis_name(std::size_t index) const;
};

// An exact linear map between tensor products of based spaces. Entries are a
// dense column-major matrix, shape total(cod) x total(dom).
class LinMap {
public:
    LinMap() = default;
    LinMap(Field f, SpaceSignature dom, SpaceSignature cod);

    const SpaceSignature& dom() const { return dom_; }
    const SpaceSignature& cod() const { return cod_; }
    const Field& field() const { return fld_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[c * rows_ + r]; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[c * rows_ + r]; }

    bool entries_equal(const LinMap& o) const;
    bool is_zero() const;

    LinMap operator+(const LinMap&) const;
    LinMap operator-(const LinMap&) const;

    std::string str() const;  // row-major nested array of scalar strings

private:
    Field fld_{};
    SpaceSignature dom_, cod_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

LinMap identity(Field f, const SpaceSignature& s);
LinMap zero_map(Field f, const SpaceSignature& dom, const SpaceSignature& cod);

inline bool entries_equal(const LinMap& a, const LinMap& b) { return a.entries_equal(b); }

// g ∘ f; requires total(dom(g)) == total(cod(f)).
LinMap compose(const LinMap& g, const LinMap& f);
template <typename... Ms>
LinMap compose(const LinMap& g, const LinMap& f, const Ms&... rest) {
    return compose(compose(g, f), rest...);
}

// Kronecker product respecting leftmost-most-significant basis order.
LinMap tensor(const LinMap& f, const LinMap& g);
template <typename... Ms>
LinMap tensor(const LinMap& f, const LinMap& g, const Ms&... rest) {
    return tensor(tensor(f, g), rest...);
}

// The symmetry A⊗B → B⊗A (block-swap permutation); its own inverse family:
// the inverse of braiding(A,B) is braiding(B,A).
LinMap braiding(Field f, const SpaceSignature& a, const SpaceSignature& b);

// Matrix transpose, relabelled with the given signatures (dual spaces).
LinMap transpose(const LinMap& f, SpaceSignature dom, SpaceSignature cod);

std::size_t rank(const LinMap& f);
bool is_surjective(const LinMap& f);
bool is_injective(const LinMap& f);

// Exact kernel basis via fraction-free elimination; deterministic order
// (one vector per free column, columns ascending). Empty iff injective.
std::vector<LinMap> kernel_basis(const LinMap& f);

// f = include ∘ project with project surjective and include injective; the
// image basis is f's pivot columns, leftmost-first.
struct ImageFactorization {
    SpaceSignature image;  // anonymous factor of dim rank(f)
    LinMap project;        // dom(f) -> image
    LinMap include;        // image -> cod(f)
    std::vector<std::size_t> pivot_columns;
};
ImageFactorization image_factorization(const LinMap& f, const std::string& image_label = "im");

// A right inverse f∘s = id, supported on f's pivot columns. Throws
// NotSurjective if rank(f) < dim cod(f).
LinMap right_section(const LinMap& f);

// The unique u with u ∘ epi = target, computed as target ∘ right_section(epi)
// and then verified exactly. Throws NotSurjective / NotWellDefined.
LinMap solve_through_epi(const LinMap& target, const LinMap& epi);

// Exact inverse of a square map; throws NotInvertible (message carries a
// rendered kernel vector) when singular.
LinMap inverse(const LinMap& f);

// Least-committal exact solution X of M∘X = B (free variables set to zero);
// nullopt when inconsistent.
std::optional<LinMap> solve_linear(const LinMap& m, const LinMap& b);

// Renders a column vector over `sig` as a linear combination of named basis
// vectors, e.g. "δ_1⊗δ_z" or "2·e0 - e3".
std::string render_vector(const SpaceSignature& sig, const LinMap& column);

// Coordinate duality data for a based space: η: I → V⊗V*, ε: V*⊗V → I.
struct Duality {
    SpaceSignature space;
    SpaceSignature dual;
    LinMap eta;
    LinMap eps;
};
Duality make_duality(Field f, const SpaceSignature& v);
// Duality exhibiting V as the dual of V* (coordinate pairing reversed).
Duality reverse_duality(const Duality& d);
// Duality on V⊗W with dual W*⊗V*.
Duality tensor_duality(const Duality& dv, const Duality& dw);

}  // namespace mulhopf
