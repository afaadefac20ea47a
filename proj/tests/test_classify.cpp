#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sp2g/classify.hpp"
#include "sp2g/parse.hpp"
#include "sp2g/render.hpp"

using namespace sp2g;

namespace {

F2Vector vec(const std::string& s) { return F2Vector::from_string(s); }

// The worked witness table for Q2∘D4 (q = w^2+wx+x^2+yz): every row must
// satisfy q(a) = q(a - v) = 0.
const std::vector<std::pair<std::string, std::string>> kQ2D4Table = {
    {"0001", "0000"}, {"0010", "0000"}, {"1111", "0000"}, {"1011", "0000"},
    {"0111", "0000"}, {"0011", "0001"}, {"1000", "1111"}, {"0100", "1111"},
    {"1110", "1111"}, {"1101", "1111"}, {"0110", "0111"}, {"0101", "0111"},
    {"1100", "0111"}, {"1010", "1011"}, {"1001", "1011"},
};

// The worked witness table for the order-64 example (z^2+wx+wz+xy, wy).
const std::vector<std::pair<std::string, std::string>> k64Table = {
    {"1000", "0000"}, {"0100", "0000"}, {"0010", "0000"}, {"1001", "0000"},
    {"0111", "0000"}, {"0001", "1000"}, {"1100", "1000"}, {"1010", "1000"},
    {"1111", "1000"}, {"0110", "0010"}, {"0101", "0010"}, {"0011", "0100"},
    {"1110", "1001"}, {"1011", "1001"}, {"1101", "1001"},
};

// The obstruction table for the order-128 example at v = (1,1,1,1):
// all zeros a of q and the values q(a - v), none of which vanish.
const std::vector<std::pair<std::string, std::string>> k128Obstruction = {
    {"0010", "100"}, {"0000", "011"}, {"0100", "110"}, {"1000", "101"},
    {"0001", "111"}, {"0101", "010"}, {"1001", "001"},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("Q2∘D4 is strongly real and the worked table rows are valid") {
    QuadraticMap qm = paper_example("q2_d4");
    SRResult sr = strongly_real(qm);
    CHECK(sr.strongly_real);
    CHECK(sr.witness.size() == 15);
    CHECK(sr.obstructions.empty());

    for (const auto& [v_s, a_s] : kQ2D4Table) {
        F2Vector v = vec(v_s), a = vec(a_s);
        CHECK(evaluate_map(qm, a).is_zero());
        CHECK(evaluate_map(qm, a + v).is_zero());
    }

    // the library's deterministic witness for (0,0,1,1) is the row the
    // table shows
    auto it = std::find_if(sr.witness.begin(), sr.witness.end(),
                           [](const auto& p) { return p.first == vec("0011"); });
    REQUIRE(it != sr.witness.end());
    CHECK(it->second == vec("0001"));
}

TEST_CASE("witnesses are the first valid conjugator in lexicographic order") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 40; ++trial) {
        QuadraticMap qm = oracle::random_group_map(rng, 4, 1 + static_cast<int>(rng() % 2));
        SRResult sr = strongly_real(qm);
        std::map<uint64_t, F2Vector> by_rank;
        for (const auto& [v, a] : sr.witness) by_rank.emplace(v.lex_rank(), a);
        int n = qm.dim_v();
        for (uint64_t rank = 1; rank < (uint64_t{1} << n); ++rank) {
            F2Vector v = F2Vector::from_lex_rank(n, rank);
            // independent first-hit scan
            std::optional<F2Vector> expect;
            for (uint64_t ar = 0; ar < (uint64_t{1} << n); ++ar) {
                F2Vector a = F2Vector::from_lex_rank(n, ar);
                if (a == v) continue;
                if (evaluate_map(qm, a).is_zero() && evaluate_map(qm, a + v).is_zero()) {
                    expect = a;
                    break;
                }
            }
            auto it = by_rank.find(rank);
            CHECK(expect.has_value() == (it != by_rank.end()));
            if (expect && it != by_rank.end()) CHECK(*expect == it->second);
        }
    }
}

TEST_CASE("the isotropic map that is not strongly real") {
    QuadraticMap qm = paper_example("isotropic_not_sr");
    // isotropic: q(0,0,1) = 0
    CHECK(evaluate_map(qm, vec("001")).is_zero());
    SRResult sr = strongly_real(qm);
    CHECK_FALSE(sr.strongly_real);
    CHECK(*sr.obstruction() == vec("111"));
}

TEST_CASE("strong reality implies isotropy") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 60; ++trial) {
        QuadraticMap qm = oracle::random_group_map(rng, 4, 2);
        SRResult sr = strongly_real(qm);
        if (!sr.strongly_real) continue;
        uint64_t zeros = map_zero_count(qm);
        CHECK(zeros > 1);  // some nonzero vector with q(v) = 0
    }
}

TEST_CASE("order-64 example: strongly real, not totally orthogonal") {
    QuadraticMap qm = paper_example("example_64");
    ClassificationReport report = classify(qm);
    CHECK(report.sr.strongly_real);
    CHECK_FALSE(report.to.totally_orthogonal);
    CHECK(report.gauss_check);
    REQUIRE(report.sr_bruteforce_agrees.has_value());
    CHECK(*report.sr_bruteforce_agrees);

    for (const auto& [v_s, a_s] : k64Table) {
        F2Vector v = vec(v_s), a = vec(a_s);
        CHECK(evaluate_map(qm, a).is_zero());
        CHECK(evaluate_map(qm, a + v).is_zero());
    }
    auto it = std::find_if(report.sr.witness.begin(), report.sr.witness.end(),
                           [](const auto& p) { return p.first == vec("0011"); });
    REQUIRE(it != report.sr.witness.end());
    CHECK(it->second == vec("0100"));

    // s = (1,1) is the obstructing functional: q_s ≅ [1,1] ⊥ [0,0]
    REQUIRE(report.to.transfers.size() == 3);
    const TransferDetail& t3 = report.to.transfers[2];
    CHECK(t3.s == vec("11"));
    CHECK(t3.verdict == TransferVerdict::arf_one);
    auto ind = induced_form(qm, vec("11"));
    REQUIRE(ind.has_value());
    CHECK(is_isometric(ind->form, parse_form("w^2 + w*x + x^2 + y*z")));

    // the explicit change of variables sending s*(q) to [1,1] ⊥ [0,0]
    QuadraticForm s_q = transfer(qm, vec("11"));
    F2Matrix subst = F2Matrix::from_strings({"1101", "0110", "1010", "0011"});
    CHECK(compose(s_q, subst) == parse_form("w^2 + w*x + x^2 + y*z"));
}

TEST_CASE("order-128 example: totally orthogonal, not strongly real") {
    QuadraticMap qm = paper_example("example_128");
    ClassificationReport report = classify(qm);
    CHECK_FALSE(report.sr.strongly_real);
    CHECK(report.to.totally_orthogonal);
    CHECK(report.gauss_check);
    REQUIRE(report.sr_bruteforce_agrees.has_value());
    CHECK(*report.sr_bruteforce_agrees);

    REQUIRE(report.sr.obstruction().has_value());
    CHECK(*report.sr.obstruction() == vec("1111"));

    // the zeros of q are exactly the seven worked vectors
    std::set<std::string> zeros;
    for (uint64_t v = 0; v < 16; ++v) {
        F2Vector vv(4, v);
        if (evaluate_map(qm, vv).is_zero()) zeros.insert(vv.to_string());
    }
    std::set<std::string> expected_zeros;
    for (const auto& [a_s, unused] : k128Obstruction) expected_zeros.insert(a_s);
    CHECK(zeros == expected_zeros);

    // and q(a - v) matches the worked value on every row
    F2Vector v = vec("1111");
    for (const auto& [a_s, qav] : k128Obstruction) {
        CHECK(evaluate_map(qm, vec(a_s) + v).to_string() == qav);
    }

    // every transfer verdict is ARF_ZERO
    for (const TransferDetail& t : report.to.transfers) {
        CHECK(t.verdict == TransferVerdict::arf_zero);
    }
}

TEST_CASE("extraspecial families across small ranks") {
    for (int n = 1; n <= 4; ++n) {
        QuadraticMap d4n = extraspecial({n, ExtraspecialFamily::d4_power}).qmap();
        ClassificationReport rd = classify(d4n);
        CHECK(rd.sr.strongly_real);
        CHECK(rd.to.totally_orthogonal);

        QuadraticMap q2n = extraspecial({n, ExtraspecialFamily::q2_d4_power}).qmap();
        ClassificationReport rq = classify(q2n);
        CHECK(rq.sr.strongly_real == (n >= 2));
        CHECK_FALSE(rq.to.totally_orthogonal);
    }
}

TEST_CASE("classify verdicts for the three headline maps") {
    ClassificationReport q2 = classify(paper_example("q2"));
    CHECK_FALSE(q2.sr.strongly_real);
    CHECK_FALSE(q2.to.totally_orthogonal);

    ClassificationReport q2d4 = classify(paper_example("q2_d4"));
    CHECK(q2d4.sr.strongly_real);
    CHECK_FALSE(q2d4.to.totally_orthogonal);

    ClassificationReport big = classify(paper_example("example_128"));
    CHECK_FALSE(big.sr.strongly_real);
    CHECK(big.to.totally_orthogonal);
}

TEST_CASE("criterion agrees with the group-level brute force on random maps") {
    // shapes that admit regular spanning maps (m = 1 needs even n)
    const std::vector<std::pair<int, int>> shapes = {
        {2, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}};
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 1000; ++trial) {
        auto [n, m] = shapes[rng() % shapes.size()];
        QuadraticMap qm = oracle::random_group_map(rng, n, m);
        SpecialGroup g = SpecialGroup::construct(qm);
        CHECK(strongly_real(qm).strongly_real ==
              is_strongly_real_bruteforce(g).strongly_real);
    }
}

TEST_CASE("transfer verdicts are invariant under precomposition") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 40; ++trial) {
        QuadraticMap qm = oracle::random_group_map(rng, 4, 2);
        F2Matrix t = oracle::random_invertible(rng, 4);
        TOResult before = totally_orthogonal(qm);
        TOResult after = totally_orthogonal(compose_map(qm, t));
        REQUIRE(before.transfers.size() == after.transfers.size());
        for (size_t i = 0; i < before.transfers.size(); ++i) {
            CHECK(before.transfers[i].verdict == after.transfers[i].verdict);
        }
        CHECK(before.totally_orthogonal == after.totally_orthogonal);
        CHECK(strongly_real(qm).strongly_real ==
              strongly_real(compose_map(qm, t)).strongly_real);
    }
}

TEST_CASE("preconditions are enforced") {
    QuadraticMap irregular(2, {QuadraticForm(2)});
    CHECK_THROWS_AS(strongly_real(irregular), std::invalid_argument);
    CHECK_THROWS_AS(totally_orthogonal(irregular), std::invalid_argument);
    CHECK_THROWS_AS(classify(irregular), std::invalid_argument);
}

TEST_CASE("paper example registry") {
    CHECK(paper_example("example_64") ==
          parse_map("vars w x y z (z^2+w*x+w*z+x*y, w*y)"));
    CHECK(paper_example("example_128") == parse_map("vars w x y z (w*x+y*z, w*y, x*y)"));
    CHECK(paper_example("isotropic_not_sr") == parse_map("vars x y z (x^2+x*y+y^2, x*z)"));
    CHECK_THROWS_AS(paper_example("nonsense"), std::invalid_argument);
    CHECK(paper_examples().size() == 8);
}

TEST_CASE("JSON report is schema-stable and key-sorted") {
    std::string doc = report_to_json(classify(paper_example("q2_d4")));
    size_t g = doc.find("\"gauss_check\"");
    size_t o = doc.find("\"sr_obstruction\"");
    size_t w = doc.find("\"sr_witness\"");
    size_t s = doc.find("\"strongly_real\"");
    size_t t = doc.find("\"totally_orthogonal\"");
    size_t tr = doc.find("\"transfers\"");
    REQUIRE(g != std::string::npos);
    REQUIRE(tr != std::string::npos);
    CHECK(g < o);
    CHECK(o < w);
    CHECK(w < s);
    CHECK(s < t);
    CHECK(t < tr);
    CHECK(doc.find("\"sr_obstruction\": null") != std::string::npos);

    std::string doc128 = report_to_json(classify(paper_example("example_128")));
    CHECK(doc128.find("\"sr_obstruction\": \"1111\"") != std::string::npos);
    CHECK(doc128.find("\"verdict\": \"ARF_ZERO\"") != std::string::npos);
}

TEST_CASE("golden: Q2∘D4 witness table") {
    std::string table = report_to_table(classify(paper_example("q2_d4")));
    CHECK(table == read_file(std::string(SP2G_GOLDEN_DIR) + "/q2d4_classify.txt"));
}

TEST_CASE("golden: order-128 obstruction table") {
    std::string table = report_to_table(classify(paper_example("example_128")));
    CHECK(table == read_file(std::string(SP2G_GOLDEN_DIR) + "/example128_classify.txt"));
}
