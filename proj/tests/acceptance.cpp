// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "f4skein/papercheck.hpp"

using namespace f4skein;

namespace {

struct Criterion {
    std::string title;
    std::function<std::string()> run; // empty string on success, else the first failure
};

TwoStrand b(int i) { return TwoStrand::basis(i); }

TwoStrand random_vector(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-5, 5), expo(-10, 10);
    TwoStrand t;
    for (int i = 0; i < kTwoDim; ++i) {
        ScalarQ c = ScalarQ(coef(rng)) * ScalarQ::q(expo(rng)) + ScalarQ(coef(rng)) * ScalarQ::q(expo(rng));
        if (rng() % 3 == 0)
            c = c / qint(1 + static_cast<int>(rng() % 5));
        t[i] = c;
    }
    return t;
}

std::string scalars() {
    ScalarQ d = loop_value(), p = bigon_value();
    if (!d.is_laurent() || !d.num().has_natural_coeffs())
        return "delta not in N[q,q^-1]: " + d.to_string();
    if (!p.is_laurent() || !p.num().has_natural_coeffs())
        return "phi not in N[q,q^-1]: " + p.to_string();
    if (d.specialize(1) != 26)
        return "delta(1) = " + d.specialize(1).get_str();
    if (p.specialize(1) != 7)
        return "phi(1) = " + p.specialize(1).get_str();
    if (zparam().specialize(1) != 0)
        return "z(1) = " + zparam().specialize(1).get_str();
    return {};
}

std::string dimensions() {
    if (!(qdim(Weight::omega(4)) == loop_value()))
        return "qdim(w4) = " + qdim(Weight::omega(4)).to_string();
    ScalarQ sum;
    mpq_class classical = 0;
    for (const auto& w : tensor_square_weights()) {
        sum += qdim(w);
        classical += qdim(w).specialize(1);
    }
    if (classical != 676)
        return "classical sum " + classical.get_str();
    if (!(sum == loop_value() * loop_value()))
        return "sum of qdims " + sum.to_string();
    return {};
}

std::string catalog() {
    auto rs = run_checks();
    if (rs.size() != 15)
        return "catalog has " + std::to_string(rs.size()) + " entries";
    for (const auto& r : rs)
        if (!r.passed)
            return std::to_string(r.index) + " " + r.name + ": " + r.lhs + " vs " + r.rhs;
    return {};
}

std::string table() {
    MulTable derived = derive_mul_table();
    for (int i = 0; i < kTwoDim; ++i)
        for (int j = 0; j < kTwoDim; ++j)
            if (!(derived[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  mul_table()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
                return "frozen table differs at " + std::to_string(i) + "," + std::to_string(j);
    int triples = 0;
    for (int i = 0; i < kTwoDim; ++i)
        for (int j = 0; j < kTwoDim; ++j)
            for (int k = 0; k < kTwoDim; ++k) {
                if (!(mul(mul(b(i), b(j)), b(k)) == mul(b(i), mul(b(j), b(k)))))
                    return "not associative at " + std::to_string(i) + std::to_string(j) + std::to_string(k);
                ++triples;
            }
    if (triples != 125)
        return "checked " + std::to_string(triples) + " triples";
    for (int i = 0; i < kTwoDim; ++i)
        if (!(mul(b(kJail), b(i)) == b(i)) || !(mul(b(i), b(kJail)) == b(i)))
            return "jail is not a unit";
    if (!(mul(b(kHourglass), b(kHourglass)) == loop_value() * b(kHourglass)))
        return "hourglass^2";
    if (!(mul(b(kIIndex), b(kIIndex)) == bigon_value() * b(kIIndex)))
        return "I^2";
    if (!(mul(b(kXIndex), b(kHourglass)) == ScalarQ::q(24) * b(kHourglass)))
        return "X hourglass";
    return {};
}

std::string idempotent_suite() {
    auto es = idempotent_data();
    auto bad = idempotent_failures(es);
    if (!bad.empty())
        return bad.front();
    for (const auto& e : es)
        if (!(closure(e.e) == qdim(e.weight)))
            return "closure(e_" + e.name + ") = " + closure(e.e).to_string();
    return {};
}

std::string elimination() {
    LinComb diff = eliminate_crossings(parse_expr("x+")) - eliminate_crossings(parse_expr("x-"));
    LinComb want = zparam() * parse_expr("id(2) - cap ; cup + split * id(1) ; id(1) * merge - merge ; split");
    if (!(diff == want))
        return "skein after elimination: " + print_lincomb(diff);
    std::mt19937 rng(1);
    for (int i = 0; i < kTwoDim; ++i)
        if (!(from_planar(planar_basis_change(b(i))) == b(i)))
            return "round trip fails on basis " + std::to_string(i);
    for (int n = 0; n < 100; ++n) {
        TwoStrand a = random_vector(rng);
        if (!(from_planar(planar_basis_change(a)) == a) || !(planar_basis_change(from_planar(a.c)) == a.c))
            return "round trip fails on " + a.to_string();
    }
    return {};
}

std::string soundness() {
    // Rules with at most four boundary points, placed in two-strand contexts and evaluated in the algebra.
    const TwoStrand jail = b(kJail), e = b(kHourglass), h = b(kHIndex), i = b(kIIndex), x = b(kXIndex);
    if (!(mul(i, i) == bigon_value() * i))
        return "bigon";
    if (!mul(e, i).is_zero())
        return "lollipop";
    if (!(mul(e, x) == kink_value() * e))
        return "curl";
    if (!(mul(i, x) == twist_value() * i))
        return "slide";
    if (!(mul(i, h) == triangle_value() * i))
        return "triangle";
    if (!(mul(x, xminus()) == jail))
        return "reidemeister2";
    if (!(mul(h, h) == TwoStrand::parse(relations::kSquareCoeffs)))
        return "square";
    if (!(x - xminus() == zparam() * (jail - e + h - i)))
        return "skein";
    Diagram dotted = parse_expr(relations::kDotted).begin()->second.diagram;
    Diagram xh = parse_expr("split * id(1) ; id(1) * merge ; x-").begin()->second.diagram;
    TwoStrand v = mul(xminus(), h);
    bool found = false;
    for (int k = 0; k < 4 && !found; ++k) {
        if (xh.rotated(k).key() == dotted.key()) {
            found = ScalarQ::parse(relations::kDottedScale) * v == TwoStrand::parse(relations::kDottedCoeffs);
            if (!found)
                return "dotted";
        }
        v = rot2(v);
    }
    if (!found)
        return "dotted diagram not located";
    // crossing-free rules give every product independently
    const std::array<std::string_view, 5> planar_words = {relations::kJail, relations::kHourglass, relations::kH,
                                                          relations::kI, relations::kSquare};
    for (int r = 0; r < kTwoDim; ++r)
        for (int c = 0; c < kTwoDim; ++c) {
            LinComb p = normalize_planar(compose(parse_expr(basis_words()[static_cast<std::size_t>(r)]),
                                                 parse_expr(basis_words()[static_cast<std::size_t>(c)])))
                            .reduced;
            Coords want = planar_basis_change(mul(b(r), b(c)));
            LinComb expect(2, 2);
            for (int k = 0; k < kTwoDim; ++k)
                expect += want[static_cast<std::size_t>(k)] * parse_expr(planar_words[static_cast<std::size_t>(k)]);
            if (!(p == expect))
                return "planar route differs at " + std::to_string(r) + "," + std::to_string(c);
        }
    return {};
}

std::string properties() {
    std::mt19937 rng(20);
    for (int n = 0; n < 200; ++n) {
        TwoStrand a = random_vector(rng);
        if (!(rot2(rot2(a)) == a))
            return "rot2 twice on " + a.to_string();
        if (!(xi2(xi2(a)) == a))
            return "xi2 twice on " + a.to_string();
        if (!(closure(xi2(a)) == closure(a).bar()))
            return "closure bar on " + a.to_string();
    }
    return soundness();
}

std::string links() {
    ScalarQ d = loop_value();
    if (!(reduce_closed(parse_expr("cup ; cap")) == d))
        return "unknot";
    if (!(link_invariant({}) == d * d) || !(reduce_closed(parse_expr("(cup ; cap) * (cup ; cap)")) == d * d))
        return "2-unlink";
    ScalarQ k1 = link_invariant({1}), k2 = link_invariant({-1});
    bool kinks = (k1 == ScalarQ::q(-24) * d && k2 == ScalarQ::q(24) * d);
    if (!kinks)
        return "kink: " + k1.to_string();
    ScalarQ hopf = link_invariant({2});
    ScalarQ direct = reduce_closed(closure_diagram(parse_expr("x+ ; x+")));
    if (!(hopf == direct))
        return "Hopf link: " + hopf.to_string() + " vs " + direct.to_string();
    return {};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"delta, phi in N[q,q^-1]; delta(1)=26, phi(1)=7, z(1)=0", scalars},
        {"qdim(w4)=delta; classical sum 676; symbolic sum delta^2", dimensions},
        {"all fifteen identity checks pass", catalog},
        {"derived table: frozen copy, associativity (125), unit, forced entries", table},
        {"idempotents: orthogonal, complete, traces equal quantum dimensions", idempotent_suite},
        {"crossing elimination satisfies the skein relation; basis change round trip", elimination},
        {"rot2^2 = xi2^2 = id (200 random), closure bar symmetry, rule soundness", properties},
        {"links: unknot, 2-unlink, kinks, Hopf link by two routes", links},
    };
    int failed = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        std::string why;
        try {
            why = criteria[n].run();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << (why.empty() ? "PASS" : "FAIL") << " [" << n + 1 << "] " << criteria[n].title;
        if (!why.empty()) {
            std::cout << " -- " << why;
            ++failed;
        }
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
