#include "sp2g/classify.hpp"

#include <stdexcept>

#include "sp2g/parse.hpp"

namespace sp2g {

namespace {

void check_group_hypotheses(const QuadraticMap& qm) {
    if (!is_regular(qm)) throw std::invalid_argument("map not regular");
    if (!image_spans_w(qm)) throw std::invalid_argument("image does not span W");
}

}  // namespace

SRResult strongly_real(const QuadraticMap& qm) {
    check_group_hypotheses(qm);
    int n = qm.dim_v();
    uint64_t count = uint64_t{1} << n;

    // Candidates a must have q(a) = 0; collect them once, in scan order.
    std::vector<F2Vector> zeros;
    for (uint64_t rank = 0; rank < count; ++rank) {
        F2Vector a = F2Vector::from_lex_rank(n, rank);
        if (evaluate_map(qm, a).is_zero()) zeros.push_back(a);
    }

    SRResult out;
    for (uint64_t rank = 1; rank < count; ++rank) {
        F2Vector v = F2Vector::from_lex_rank(n, rank);
        bool found = false;
        for (const F2Vector& a : zeros) {
            if (a == v) continue;
            if (evaluate_map(qm, a + v).is_zero()) {
                out.witness.emplace_back(v, a);
                found = true;
                break;
            }
        }
        if (!found) out.obstructions.push_back(v);
    }
    out.strongly_real = out.obstructions.empty();
    return out;
}

TOResult totally_orthogonal(const QuadraticMap& qm) {
    check_group_hypotheses(qm);
    int m = qm.dim_w();
    TOResult out;
    out.totally_orthogonal = true;
    for (uint64_t idx = 1; idx < (uint64_t{1} << m); ++idx) {
        F2Vector s = functional_by_index(m, idx);
        TransferDetail detail{s, TransferVerdict::undefined_transfer, std::nullopt};
        if (std::optional<InducedForm> ind = induced_form(qm, s)) {
            bool a = arf(ind->form);
            detail.verdict = a ? TransferVerdict::arf_one : TransferVerdict::arf_zero;
            detail.arf = a;
        }
        if (detail.verdict != TransferVerdict::arf_zero) out.totally_orthogonal = false;
        out.transfers.push_back(std::move(detail));
    }
    return out;
}

ClassificationReport classify(const QuadraticMap& qm) {
    ClassificationReport report;
    report.map = qm;
    report.sr = strongly_real(qm);
    report.to = totally_orthogonal(qm);
    report.gauss_check = gauss_identity_check(qm);
    if (qm.dim_v() + qm.dim_w() <= 10) {
        SpecialGroup g = SpecialGroup::construct(qm);
        GroupRealityReport brute = is_strongly_real_bruteforce(g);
        report.sr_bruteforce_agrees = brute.strongly_real == report.sr.strongly_real;
    }
    return report;
}

const std::vector<NamedMap>& paper_examples() {
    static const std::vector<NamedMap> registry = [] {
        std::vector<NamedMap> maps;
        auto add = [&maps](const std::string& name, const std::string& text) {
            maps.push_back({name, parse_map(text)});
        };
        add("d4", "vars x y (x*y)");
        add("q2", "vars x y (x^2 + x*y + y^2)");
        add("d4_d4", "vars w x y z (w*x + y*z)");
        add("q2_q2", "vars w x y z (w^2 + w*x + x^2 + y^2 + y*z + z^2)");
        add("q2_d4", "vars w x y z (w^2 + w*x + x^2 + y*z)");
        add("isotropic_not_sr", "vars x y z (x^2 + x*y + y^2, x*z)");
        add("example_64", "vars w x y z (z^2 + w*x + w*z + x*y, w*y)");
        add("example_128", "vars w x y z (w*x + y*z, w*y, x*y)");
        return maps;
    }();
    return registry;
}

const QuadraticMap& paper_example(const std::string& name) {
    for (const NamedMap& entry : paper_examples()) {
        if (entry.name == name) return entry.map;
    }
    throw std::invalid_argument("unknown example name: " + name);
}

}  // namespace sp2g
