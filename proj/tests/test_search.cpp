#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sp2g/parse.hpp"
#include "sp2g/render.hpp"
#include "sp2g/search.hpp"

using namespace sp2g;

namespace {

// From-scratch census: bucket every admissible candidate of a space by the
// minimum of its full orbit, computed by applying every (T, S) pair
// explicitly through the library's compose/postcompose. Slow and simple.
std::set<uint64_t> bruteforce_class_minima(const SearchSpace& space) {
    std::vector<F2Matrix> gl_v = oracle::all_invertible(space.dim_v);
    std::vector<F2Matrix> gl_w = oracle::all_invertible(space.dim_w);
    std::set<uint64_t> minima;
    uint64_t total = uint64_t{1} << candidate_bits(space);
    for (uint64_t code = 0; code < total; ++code) {
        QuadraticMap qm = decode_map(space, code);
        if (!is_regular(qm) || !image_spans_w(qm)) continue;
        uint64_t best = code;
        for (const F2Matrix& t : gl_v) {
            QuadraticMap qt = compose_map(qm, t);
            for (const F2Matrix& s : gl_w) {
                best = std::min(best, encode_map(postcompose_map(s, qt)));
            }
        }
        minima.insert(best);
    }
    return minima;
}

}  // namespace

TEST_CASE("encode and decode are inverse") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        int m = 1 + static_cast<int>(rng() % 3);
        QuadraticMap qm = oracle::random_map(rng, n, m);
        SearchSpace space{n, m};
        CHECK(decode_map(space, encode_map(qm)) == qm);
    }
}

TEST_CASE("two regular classes in dimension 2") {
    std::vector<QuadraticMap> classes = enumerate_classes({2, 1});
    REQUIRE(classes.size() == 2);
    // ascending codes put the hyperbolic class first
    CHECK(classes[0] == parse_map("vars x y (x*y)"));
    CHECK(arf(classes[0].component(0)) == false);
    CHECK(arf(classes[1].component(0)) == true);
}

TEST_CASE("exactly two extraspecial classes at n = 4 and n = 6") {
    for (int n : {4, 6}) {
        std::vector<QuadraticMap> classes = enumerate_classes({n, 1});
        REQUIRE(classes.size() == 2);
        std::set<bool> arfs;
        for (const QuadraticMap& qm : classes) arfs.insert(arf(qm.component(0)));
        CHECK(arfs == std::set<bool>{false, true});
    }
}

TEST_CASE("infeasible spaces are empty") {
    CHECK(enumerate_classes({2, 2}).empty());
    CHECK(enumerate_classes({3, 1}).empty());  // no regular form in odd dimension
}

TEST_CASE("enumeration matches the from-scratch census") {
    for (SearchSpace space : {SearchSpace{2, 1}, SearchSpace{3, 2}, SearchSpace{4, 1}}) {
        std::set<uint64_t> expected = bruteforce_class_minima(space);
        std::vector<uint64_t> got = enumerate_class_codes(space);
        CHECK(std::set<uint64_t>(got.begin(), got.end()) == expected);
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("canonical keys are orbit invariants") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 2);
        QuadraticMap qm = oracle::random_map(rng, n, m);
        F2Matrix t = oracle::random_invertible(rng, n);
        F2Matrix s = oracle::random_invertible(rng, m);
        QuadraticMap moved = postcompose_map(s, compose_map(qm, t));
        CHECK(canonical_key(qm) == canonical_key(moved));
    }
}

TEST_CASE("canonical keys separate and join the worked forms") {
    QuadraticMap d4_d4 = paper_example("d4_d4");
    QuadraticMap q2_q2 = paper_example("q2_q2");
    CHECK(canonical_key(d4_d4) == canonical_key(q2_q2));
    CHECK_FALSE(canonical_key(paper_example("d4")) == canonical_key(paper_example("q2")));
}

TEST_CASE("enumerated representatives are canonical") {
    for (SearchSpace space : {SearchSpace{2, 1}, SearchSpace{3, 2}, SearchSpace{4, 2}}) {
        for (uint64_t code : enumerate_class_codes(space)) {
            EquivalenceKey key = canonical_key(decode_map(space, code));
            CHECK(key.code == static_cast<unsigned __int128>(code));
        }
    }
}

TEST_CASE("canonical key rejects oversized spaces") {
    std::mt19937_64 rng(151);
    QuadraticMap too_wide = oracle::random_map(rng, 7, 1);
    CHECK_THROWS_AS(canonical_key(too_wide), std::invalid_argument);
}

TEST_CASE("emitted classes are pairwise inequivalent under random probes") {
    std::mt19937_64 rng(139);
    SearchSpace space{3, 2};
    std::vector<QuadraticMap> classes = enumerate_classes(space);
    std::vector<std::string> prekeys;
    std::vector<uint64_t> codes;
    for (const QuadraticMap& qm : classes) {
        prekeys.push_back(invariant_prekey(qm));
        codes.push_back(encode_map(qm));
    }
    std::set<uint64_t> code_set(codes.begin(), codes.end());
    for (size_t i = 0; i < classes.size(); ++i) {
        for (int probe = 0; probe < 1000; ++probe) {
            F2Matrix t = oracle::random_invertible(rng, space.dim_v);
            F2Matrix s = oracle::random_invertible(rng, space.dim_w);
            uint64_t moved = encode_map(postcompose_map(s, compose_map(classes[i], t)));
            // landing on another representative would mean a duplicate class
            if (code_set.count(moved)) CHECK(moved == codes[i]);
        }
        for (size_t j = i + 1; j < classes.size(); ++j) {
            if (prekeys[i] != prekeys[j]) continue;  // invariants already separate
            CHECK_FALSE(canonical_key(classes[i]) == canonical_key(classes[j]));
        }
    }
}

TEST_CASE("classification verdicts do not depend on the representative") {
    std::mt19937_64 rng(149);
    for (const QuadraticMap& qm : enumerate_classes({3, 2})) {
        ClassificationReport base = classify(qm);
        for (int probe = 0; probe < 10; ++probe) {
            F2Matrix t = oracle::random_invertible(rng, 3);
            F2Matrix s = oracle::random_invertible(rng, 2);
            ClassificationReport moved = classify(postcompose_map(s, compose_map(qm, t)));
            CHECK(moved.sr.strongly_real == base.sr.strongly_real);
            CHECK(moved.to.totally_orthogonal == base.to.totally_orthogonal);
        }
    }
}

TEST_CASE("survey(8) is the dihedral and quaternion pair") {
    SurveyReport report = survey(8);
    REQUIRE(report.classes.size() == 2);
    const ClassEntry& d4 = report.classes[0];
    const ClassEntry& q2 = report.classes[1];
    CHECK(d4.strongly_real);
    CHECK(d4.totally_orthogonal);
    REQUIRE(d4.extraspecial.has_value());
    CHECK(extraspecial_name(*d4.extraspecial) == "D4");
    CHECK_FALSE(q2.strongly_real);
    CHECK_FALSE(q2.totally_orthogonal);
    REQUIRE(q2.extraspecial.has_value());
    CHECK(extraspecial_name(*q2.extraspecial) == "Q2");
    for (const ClassEntry& c : report.classes) {
        CHECK(c.gauss_check);
        REQUIRE(c.cross_check.has_value());
        CHECK(*c.cross_check);
    }
}

TEST_CASE("survey(16) finds no special 2-groups") {
    CHECK(survey(16).classes.empty());
}

TEST_CASE("survey(32) pins the unique strongly real, not totally orthogonal class") {
    SurveyReport report = survey(32);
    std::vector<const ClassEntry*> hits;
    for (const ClassEntry& c : report.classes) {
        if (c.strongly_real && !c.totally_orthogonal) hits.push_back(&c);
        CHECK(c.gauss_check);
    }
    REQUIRE(hits.size() == 1);
    CHECK(hits[0]->key() == canonical_key(paper_example("q2_d4")));
    REQUIRE(hits[0]->extraspecial.has_value());
    CHECK(extraspecial_name(*hits[0]->extraspecial) == "Q2D4^1");
}

TEST_CASE("survey output is deterministic across runs and thread counts") {
    std::string first = survey_to_json(survey(32, 1));
    std::string second = survey_to_json(survey(32, 2));
    std::string third = survey_to_json(survey(32, 4));
    CHECK(first == second);
    CHECK(first == third);
}

TEST_CASE("survey validates its input") {
    CHECK_THROWS_AS(survey(7), std::invalid_argument);
    CHECK_THROWS_AS(survey(4), std::invalid_argument);
    CHECK_THROWS_AS(survey(256), std::invalid_argument);
}

TEST_CASE("claims pass with the stretch sweep skipped by default") {
    ClaimReport report = reproduce_claims({});
    CHECK(report.all_passed());
    std::map<std::string, ClaimStatus> by_name;
    for (const ClaimResult& c : report.claims) by_name[c.name] = c.status;
    CHECK(by_name.at("order8_D4_Q2") == ClaimStatus::pass);
    CHECK(by_name.at("order32_unique_SR_not_TO") == ClaimStatus::pass);
    CHECK(by_name.at("order64_unique_SR_not_TO") == ClaimStatus::pass);
    CHECK(by_name.at("no_TO_not_SR_up_to_64") == ClaimStatus::pass);
    CHECK(by_name.at("order128_TO_not_SR_exists") == ClaimStatus::pass);
    CHECK(by_name.at("order128_survey_stretch") == ClaimStatus::skipped);
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_AS(enumerate_classes({6, 2}), std::invalid_argument);
}

TEST_CASE("transvections generate the full general linear group") {
    // The orbit fill walks generator actions built from the transvections
    // I + E_ab; their multiplicative closure must be all of GL(n, 2).
    auto gl_order = [](int n) {
        uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= (uint64_t{1} << n) - (uint64_t{1} << i);
        return total;
    };
    for (int n = 2; n <= 4; ++n) {
        std::vector<F2Matrix> gens;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                F2Matrix t = F2Matrix::identity(n);
                t.set(a, b, true);
                gens.push_back(t);
            }
        }
        auto pack = [n](const F2Matrix& m) {
            uint64_t bits = 0;
            for (int r = 0; r < n; ++r) bits |= m.row_bits(r) << (r * n);
            return bits;
        };
        std::set<uint64_t> seen{pack(F2Matrix::identity(n))};
        std::vector<F2Matrix> frontier{F2Matrix::identity(n)};
        while (!frontier.empty()) {
            std::vector<F2Matrix> next;
            for (const F2Matrix& m : frontier) {
                for (const F2Matrix& g : gens) {
                    F2Matrix prod = m.mul(g);
                    if (seen.insert(pack(prod)).second) next.push_back(prod);
                }
            }
            frontier.swap(next);
        }
        CHECK(seen.size() == gl_order(n));
    }
}
