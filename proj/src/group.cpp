#include "sp2g/group.hpp"

#include <bit>
#include <stdexcept>

namespace sp2g {

namespace {

constexpr uint64_t kBruteForceCap = uint64_t{1} << 16;

void check_cap(const SpecialGroup& g) {
    if (g.order() > kBruteForceCap) {
        throw std::invalid_argument("group order exceeds the 2^16 brute-force cap");
    }
}

}  // namespace

SpecialGroup SpecialGroup::construct(const QuadraticMap& qm) {
    if (!is_regular(qm)) throw std::invalid_argument("map not regular");
    if (!image_spans_w(qm)) throw std::invalid_argument("image does not span W");
    SpecialGroup g(qm);
    // The cocycle identity holds for any bilinear c; spot-check it together
    // with c(x,x) = q(x) on small spaces.
    if (qm.dim_v() <= 4) {
        int n = qm.dim_v();
        for (uint64_t a = 0; a < (uint64_t{1} << n); ++a) {
            F2Vector va(n, a);
            if (g.cocycle(va, va) != evaluate_map(qm, va)) {
                throw std::logic_error("cocycle does not realize the quadratic map");
            }
            for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
                for (uint64_t c = 0; c < (uint64_t{1} << n); ++c) {
                    F2Vector vb(n, b), vc(n, c);
                    F2Vector lhs = g.cocycle(vb, vc) + g.cocycle(va + vb, vc);
                    F2Vector rhs = g.cocycle(va, vb + vc) + g.cocycle(va, vb);
                    if (!(lhs + rhs).is_zero()) {
                        throw std::logic_error("cocycle identity failed");
                    }
                }
            }
        }
    }
    return g;
}

GroupElement SpecialGroup::identity() const {
    return {F2Vector::zero(dim_v()), F2Vector::zero(dim_w())};
}

GroupElement SpecialGroup::element(uint64_t index) const {
    if (index >= order()) throw std::out_of_range("element index out of range");
    uint64_t vmask = (uint64_t{1} << dim_v()) - 1;
    return {F2Vector(dim_v(), index & vmask), F2Vector(dim_w(), index >> dim_v())};
}

uint64_t SpecialGroup::index_of(const GroupElement& x) const {
    return x.v.bits() | (x.w.bits() << dim_v());
}

F2Vector SpecialGroup::cocycle(const F2Vector& u, const F2Vector& v) const {
    uint64_t out = 0;
    for (int i = 0; i < dim_w(); ++i) {
        const QuadraticForm& q = qmap_.component(i);
        uint64_t rest = u.bits();
        int acc = 0;
        while (rest) {
            int r = std::countr_zero(rest);
            rest &= rest - 1;
            acc ^= std::popcount(q.row_bits(r) & v.bits());
        }
        out |= static_cast<uint64_t>(acc & 1) << i;
    }
    return F2Vector(dim_w(), out);
}

GroupElement SpecialGroup::multiply(const GroupElement& x, const GroupElement& y) const {
    if (x.v.dim() != dim_v() || y.v.dim() != dim_v() ||
        x.w.dim() != dim_w() || y.w.dim() != dim_w()) {
        throw std::invalid_argument("element does not belong to this group");
    }
    return {x.v + y.v, cocycle(x.v, y.v) + x.w + y.w};
}

GroupElement SpecialGroup::inverse(const GroupElement& x) const {
    return {x.v, cocycle(x.v, x.v) + x.w};
}

int SpecialGroup::element_order(const GroupElement& x) const {
    if (x.v.is_zero() && x.w.is_zero()) return 1;
    return evaluate_map(qmap_, x.v).is_zero() ? 2 : 4;
}

uint64_t SpecialGroup::multiply_packed(uint64_t x, uint64_t y) const {
    uint64_t vmask = (uint64_t{1} << dim_v()) - 1;
    F2Vector vx(dim_v(), x & vmask), vy(dim_v(), y & vmask);
    uint64_t v = (x ^ y) & vmask;
    uint64_t w = ((x >> dim_v()) ^ (y >> dim_v())) ^ cocycle(vx, vy).bits();
    return v | (w << dim_v());
}

uint64_t SpecialGroup::inverse_packed(uint64_t x) const {
    uint64_t vmask = (uint64_t{1} << dim_v()) - 1;
    F2Vector vx(dim_v(), x & vmask);
    return x ^ (cocycle(vx, vx).bits() << dim_v());
}

SpecialCheck verify_special(const SpecialGroup& g) {
    check_cap(g);
    uint64_t order = g.order();
    int n = g.dim_v();
    uint64_t vmask = (uint64_t{1} << n) - 1;
    SpecialCheck out;

    // (a) center = {(0, w)}: elements commuting with everything are exactly
    // those with v = 0.
    out.center_ok = true;
    for (uint64_t x = 0; x < order && out.center_ok; ++x) {
        bool central = true;
        for (uint64_t y = 0; y < order; ++y) {
            if (g.multiply_packed(x, y) != g.multiply_packed(y, x)) {
                central = false;
                break;
            }
        }
        if (central != ((x & vmask) == 0)) out.center_ok = false;
    }

    // (b) + (d): one pass over all pairs. Every commutator must equal
    // (0, b_q(v_x, v_y)), and the set of commutator values must span W
    // (the derived subgroup then is exactly 0 × W).
    out.commutators_ok = true;
    std::vector<bool> comm_seen(uint64_t{1} << g.dim_w(), false);
    for (uint64_t x = 0; x < order && out.commutators_ok; ++x) {
        for (uint64_t y = 0; y < order; ++y) {
            uint64_t comm = g.multiply_packed(g.multiply_packed(x, y),
                                              g.multiply_packed(g.inverse_packed(x),
                                                                g.inverse_packed(y)));
            F2Vector b = polar_map(g.qmap(), F2Vector(n, x & vmask), F2Vector(n, y & vmask));
            if (comm != (b.bits() << n)) {
                out.commutators_ok = false;
                break;
            }
            comm_seen[comm >> n] = true;
        }
    }
    std::vector<F2Vector> comm_values;
    for (uint64_t w = 0; w < comm_seen.size(); ++w) {
        if (comm_seen[w]) comm_values.emplace_back(g.dim_w(), w);
    }
    out.derived_ok = out.commutators_ok &&
                     mat_rank(F2Matrix(g.dim_w(), comm_values)) == g.dim_w();

    // (c) squares: x^2 = (0, q(v_x)).
    out.squares_ok = true;
    for (uint64_t x = 0; x < order; ++x) {
        uint64_t sq = g.multiply_packed(x, x);
        F2Vector q = evaluate_map(g.qmap(), F2Vector(n, x & vmask));
        if (sq != (q.bits() << n)) {
            out.squares_ok = false;
            break;
        }
    }
    return out;
}

SpecialGroup central_product(const SpecialGroup& g1, const SpecialGroup& g2) {
    if (g1.dim_w() != g2.dim_w()) {
        throw std::invalid_argument("central product needs matching centers");
    }
    return SpecialGroup::construct(map_orthogonal_sum(g1.qmap(), g2.qmap()));
}

SpecialGroup extraspecial(const ExtraspecialKind& kind) {
    if (kind.n < 1) throw std::invalid_argument("extraspecial rank must be >= 1");
    QuadraticForm acc(0);
    QuadraticForm h = NormalForm{{{false, false}}, {}}.to_form();
    QuadraticForm q11 = NormalForm{{{true, true}}, {}}.to_form();
    if (kind.family == ExtraspecialFamily::q2_d4_power) {
        acc = q11;
    } else {
        acc = h;
    }
    for (int i = 1; i < kind.n; ++i) acc = orthogonal_sum(acc, h);
    return SpecialGroup::construct(QuadraticMap(acc.dim(), {acc}));
}

ExtraspecialKind classify_extraspecial(const SpecialGroup& g) {
    if (g.dim_w() != 1) throw std::invalid_argument("not extraspecial: center is larger than 2");
    const QuadraticForm& q = g.qmap().component(0);
    if (!radical(q).empty()) throw std::invalid_argument("not extraspecial: form not regular");
    return {g.dim_v() / 2,
            arf(q) ? ExtraspecialFamily::q2_d4_power : ExtraspecialFamily::d4_power};
}

GroupRealityReport is_strongly_real_bruteforce(const SpecialGroup& g) {
    check_cap(g);
    uint64_t order = g.order();
    int n = g.dim_v();
    uint64_t vmask = (uint64_t{1} << n) - 1;

    std::vector<uint64_t> involutions;  // includes the identity
    for (uint64_t y = 0; y < order; ++y) {
        if (evaluate_map(g.qmap(), F2Vector(n, y & vmask)).is_zero()) {
            involutions.push_back(y);
        }
    }

    GroupRealityReport report;
    report.strongly_real = true;
    report.witness.assign(order, 0);
    for (uint64_t x = 0; x < order; ++x) {
        uint64_t target = g.inverse_packed(x);
        bool found = false;
        for (uint64_t y : involutions) {
            if (g.multiply_packed(y, g.multiply_packed(x, y)) == target) {
                report.witness[x] = y;
                found = true;
                break;
            }
        }
        if (!found) {
            report.strongly_real = false;
            report.obstruction = x;
            report.witness.clear();
            break;
        }
    }
    return report;
}

bool is_real_bruteforce(const SpecialGroup& g) {
    check_cap(g);
    uint64_t order = g.order();
    for (uint64_t x = 0; x < order; ++x) {
        uint64_t target = g.inverse_packed(x);
        bool found = false;
        for (uint64_t y = 0; y < order; ++y) {
            if (g.multiply_packed(g.multiply_packed(y, x), g.inverse_packed(y)) == target) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

uint64_t involution_count(const SpecialGroup& g) {
    return map_zero_count(g.qmap()) << g.dim_w();
}

}  // namespace sp2g
