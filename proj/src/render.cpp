#include "sp2g/render.hpp"

#include <map>

#include "json.hpp"
#include "sp2g/parse.hpp"

namespace sp2g {

namespace {

using nlohmann::json;

const char* verdict_name(TransferVerdict v) {
    switch (v) {
        case TransferVerdict::arf_zero: return "ARF_ZERO";
        case TransferVerdict::arf_one: return "ARF_ONE";
        case TransferVerdict::undefined_transfer: return "UNDEFINED_TRANSFER";
    }
    return "?";
}

}  // namespace

std::string report_to_json(const ClassificationReport& report) {
    json doc;
    doc["strongly_real"] = report.sr.strongly_real;
    if (std::optional<F2Vector> obs = report.sr.obstruction()) {
        doc["sr_obstruction"] = obs->to_string();
    } else {
        doc["sr_obstruction"] = nullptr;
    }
    json witness = json::array();
    for (const auto& [v, a] : report.sr.witness) {
        witness.push_back({v.to_string(), a.to_string()});
    }
    doc["sr_witness"] = witness;
    doc["totally_orthogonal"] = report.to.totally_orthogonal;
    json transfers = json::array();
    for (const TransferDetail& t : report.to.transfers) {
        json entry;
        entry["s"] = t.s.to_string();
        entry["verdict"] = verdict_name(t.verdict);
        entry["arf"] = t.arf ? json(static_cast<int>(*t.arf)) : json(nullptr);
        transfers.push_back(entry);
    }
    doc["transfers"] = transfers;
    doc["gauss_check"] = report.gauss_check;
    return doc.dump(2) + "\n";
}

std::string report_to_table(const ClassificationReport& report) {
    const QuadraticMap& qm = report.map;
    std::string out;
    out += "map: " + to_string(qm) + "\n";
    out += "dim V = " + std::to_string(qm.dim_v()) +
           ", dim W = " + std::to_string(qm.dim_w()) +
           ", group order = " + std::to_string(uint64_t{1} << (qm.dim_v() + qm.dim_w())) +
           "\n";

    if (report.sr.strongly_real) {
        out += "strongly real: yes\n";
        out += "witness table (a conjugates every listed v):\n";
        // Grouped presentation: one row per conjugating element a.
        std::map<uint64_t, std::vector<F2Vector>> by_a;
        std::map<uint64_t, F2Vector> a_of;
        for (const auto& [v, a] : report.sr.witness) {
            by_a[a.lex_rank()].push_back(v);
            a_of.emplace(a.lex_rank(), a);
        }
        for (const auto& [rank, vs] : by_a) {
            out += "  a = " + a_of.at(rank).to_string() + "  <-  v = ";
            for (size_t i = 0; i < vs.size(); ++i) {
                if (i) out += ", ";
                out += vs[i].to_string();
            }
            out += "\n";
        }
    } else {
        F2Vector obs = *report.sr.obstruction();
        out += "strongly real: no\n";
        out += "obstruction: v = " + obs.to_string() + "\n";
        std::vector<F2Vector> zeros;
        for (uint64_t rank = 0; rank < (uint64_t{1} << qm.dim_v()); ++rank) {
            F2Vector a = F2Vector::from_lex_rank(qm.dim_v(), rank);
            if (evaluate_map(qm, a).is_zero()) zeros.push_back(a);
        }
        out += "zeros of q: ";
        for (size_t i = 0; i < zeros.size(); ++i) {
            if (i) out += ", ";
            out += zeros[i].to_string();
        }
        out += "\n";
        out += "detail for v = " + obs.to_string() +
               " (no a has q(a) = q(a+v) = 0):\n";
        for (const F2Vector& a : zeros) {
            F2Vector av = a + obs;
            out += "  a = " + a.to_string() + "  a+v = " + av.to_string() +
                   "  q(a+v) = " + evaluate_map(qm, av).to_string() + "\n";
        }
    }

    out += report.to.totally_orthogonal ? "totally orthogonal: yes\n"
                                        : "totally orthogonal: no\n";
    out += "transfers:\n";
    for (size_t i = 0; i < report.to.transfers.size(); ++i) {
        const TransferDetail& t = report.to.transfers[i];
        out += "  s_" + std::to_string(i + 1) + " = " + t.s.to_string() + "  " +
               "s*q = " + to_string(transfer(qm, t.s),
                                    default_variables(qm.dim_v())) +
               "  ->  " + verdict_name(t.verdict);
        if (t.arf) out += " (arf " + std::to_string(static_cast<int>(*t.arf)) + ")";
        out += "\n";
    }
    out += std::string("gauss identity: ") + (report.gauss_check ? "ok" : "FAILED") + "\n";
    if (report.sr_bruteforce_agrees) {
        out += std::string("group brute-force cross-check: ") +
               (*report.sr_bruteforce_agrees ? "agree" : "DISAGREE") + "\n";
    }
    return out;
}

namespace {

json class_entry_json(const ClassEntry& entry) {
    json c;
    c["dim_v"] = entry.dim_v;
    c["dim_w"] = entry.dim_w;
    c["key"] = entry.key().to_hex();
    c["map"] = to_string(entry.map);
    c["strongly_real"] = entry.strongly_real;
    c["totally_orthogonal"] = entry.totally_orthogonal;
    c["gauss_check"] = entry.gauss_check;
    c["extraspecial"] =
        entry.extraspecial ? json(extraspecial_name(*entry.extraspecial)) : json(nullptr);
    c["cross_check"] = entry.cross_check ? json(*entry.cross_check) : json(nullptr);
    return c;
}

}  // namespace

std::string survey_to_json(const SurveyReport& report) {
    json doc;
    doc["order"] = report.order;
    doc["exhaustive"] = report.exhaustive;
    doc["scope"] = "special 2-groups only";
    json splits = json::array();
    for (const SplitSummary& s : report.splits) {
        json e;
        e["dim_v"] = s.dim_v;
        e["dim_w"] = s.dim_w;
        e["candidates"] = s.candidates;
        e["valid"] = s.valid;
        e["classes"] = s.classes;
        splits.push_back(e);
    }
    doc["splits"] = splits;
    json classes = json::array();
    for (const ClassEntry& c : report.classes) classes.push_back(class_entry_json(c));
    doc["classes"] = classes;
    return doc.dump(2) + "\n";
}

std::string survey_to_table(const SurveyReport& report) {
    std::string out;
    out += "survey of special 2-groups of order " + std::to_string(report.order) +
           " (scope: special 2-groups only)\n";
    for (const SplitSummary& s : report.splits) {
        out += "  split dim V = " + std::to_string(s.dim_v) +
               ", dim W = " + std::to_string(s.dim_w) + ": " +
               std::to_string(s.valid) + " of " + std::to_string(s.candidates) +
               " candidates admissible, " + std::to_string(s.classes) + " classes\n";
    }
    out += "classes:\n";
    for (const ClassEntry& c : report.classes) {
        out += "  key " + c.key().to_hex() + "  " + to_string(c.map) + "\n";
        out += "    strongly real: ";
        out += c.strongly_real ? "yes" : "no";
        out += "  totally orthogonal: ";
        out += c.totally_orthogonal ? "yes" : "no";
        if (c.extraspecial) out += "  extraspecial: " + extraspecial_name(*c.extraspecial);
        if (c.cross_check) {
            out += *c.cross_check ? "  [cross-check ok]" : "  [cross-check DISAGREES]";
        }
        if (!c.gauss_check) out += "  [gauss identity FAILED]";
        out += "\n";
    }
    return out;
}

std::string claims_to_table(const ClaimReport& report) {
    std::string out;
    for (const ClaimResult& c : report.claims) {
        const char* status = c.status == ClaimStatus::pass   ? "pass"
                             : c.status == ClaimStatus::fail ? "FAIL"
                                                             : "SKIPPED";
        out += c.name + ": " + status + "  (" + c.detail + ")\n";
    }
    return out;
}

std::string claims_to_json(const ClaimReport& report) {
    json doc = json::array();
    for (const ClaimResult& c : report.claims) {
        json e;
        e["name"] = c.name;
        e["status"] = c.status == ClaimStatus::pass   ? "pass"
                      : c.status == ClaimStatus::fail ? "fail"
                                                      : "skipped";
        e["detail"] = c.detail;
        doc.push_back(e);
    }
    return doc.dump(2) + "\n";
}

std::string extraspecial_name(const ExtraspecialKind& kind) {
    if (kind.n == 1) {
        return kind.family == ExtraspecialFamily::d4_power ? "D4" : "Q2";
    }
    if (kind.family == ExtraspecialFamily::d4_power) {
        return "D4^" + std::to_string(kind.n);
    }
    return "Q2D4^" + std::to_string(kind.n - 1);
}

}  // namespace sp2g
