#pragma once

#include <string>
#include <vector>

#include "mulhopf/linmap.hpp"

namespace mulhopf {

// One verified law. `witness` is nonempty exactly when the law failed; for
// equality laws it names the first differing domain basis vector and the
// exact lhs-rhs difference column.
struct LawResult {
    std::string id;
    bool passed = false;
    std::string witness;
};

struct CheckReport {
    std::vector<LawResult> laws;

    bool all_passed() const;
    const LawResult* find(const std::string& id) const;
    bool passed(const std::string& id) const;  // throws if id unknown

    // Exact equality of two composites over the same domain/codomain.
    void law_eq(const std::string& id, const LinMap& lhs, const LinMap& rhs);
    // Boolean law with a caller-supplied witness on failure.
    void law_true(const std::string& id, bool ok, const std::string& witness_on_fail = "");
    // Surjectivity law with a rank witness on failure.
    void law_surjective(const std::string& id, const LinMap& f);
    // Zero-kernel law; witness is a rendered kernel vector.
    void law_injective(const std::string& id, const LinMap& f);
    // Appends another report's laws under `prefix + "."`.
    void merge(const std::string& prefix, const CheckReport& sub);

    std::string summary() const;  // "ok (n laws)" or "FAIL <ids>"
};

}  // namespace mulhopf
