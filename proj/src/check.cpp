#include "mulhopf/check.hpp"

namespace mulhopf {

bool CheckReport::all_passed() const {
    for (const auto& l : laws)
        if (!l.passed) return false;
    return true;
}

const LawResult* CheckReport::find(const std::string& id) const {
    for (const auto& l : laws)
        if (l.id == id) return &l;
    return nullptr;
}

bool CheckReport::passed(const std::string& id) const {
    const LawResult* l = find(id);
    if (!l) throw std::invalid_argument("CheckReport: unknown law " + id);
    return l->passed;
}

void CheckReport::law_eq(const std::string& id, const LinMap& lhs, const LinMap& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        laws.push_back({id, false,
                        "shape mismatch " + std::to_string(lhs.rows()) + "x" +
                            std::to_string(lhs.cols()) + " vs " + std::to_string(rhs.rows()) +
                            "x" + std::to_string(rhs.cols())});
        return;
    }
    for (std::size_t c = 0; c < lhs.cols(); ++c)
        for (std::size_t r = 0; r < lhs.rows(); ++r)
            if (lhs.at(r, c) != rhs.at(r, c)) {
                LinMap diff(lhs.field(), SpaceSignature::unit(), lhs.cod());
                for (std::size_t i = 0; i < lhs.rows(); ++i)
                    diff.at(i, 0) = lhs.at(i, c) - rhs.at(i, c);
                laws.push_back({id, false,
                                "at " + lhs.dom().basis_name(c) + ": lhs-rhs = " +
                                    render_vector(lhs.cod(), diff)});
                return;
            }
    laws.push_back({id, true, ""});
}

void CheckReport::law_true(const std::string& id, bool ok, const std::string& witness_on_fail) {
    laws.push_back({id, ok, ok ? "" : witness_on_fail});
}

void CheckReport::law_surjective(const std::string& id, const LinMap& f) {
    const std::size_t rk = rank(f);
    law_true(id, rk == f.rows(),
             "rank " + std::to_string(rk) + " < " + std::to_string(f.rows()));
}

void CheckReport::law_injective(const std::string& id, const LinMap& f) {
    auto ker = kernel_basis(f);
    law_true(id, ker.empty(),
             ker.empty() ? "" : "kernel contains " + render_vector(f.dom(), ker.front()));
}

void CheckReport::merge(const std::string& prefix, const CheckReport& sub) {
    for (const auto& l : sub.laws)
        laws.push_back({prefix.empty() ? l.id : prefix + "." + l.id, l.passed, l.witness});
}

std::string CheckReport::summary() const {
    std::string fails;
    for (const auto& l : laws)
        if (!l.passed) fails += (fails.empty() ? "" : ", ") + l.id;
    if (fails.empty()) return "ok (" + std::to_string(laws.size()) + " laws)";
    return "FAIL " + fails;
}

}  // namespace mulhopf
