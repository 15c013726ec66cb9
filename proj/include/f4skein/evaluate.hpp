#pragma once
/**
 * @file evaluate.hpp
 * @brief Trace closures of two-strand elements and invariants of 2-bridge links.
 */

#include <string>
#include <vector>

#include "twopoint.hpp"

namespace f4skein {

/// Closes both strands of a 2 -> 2 word with arcs on the right.
inline std::string closure_word(std::string_view f) {
    return "cup ; id(1) * cup * id(1) ; (" + std::string(f) + ") * id(2) ; id(1) * cap * id(1) ; cap";
}

inline LinComb closure_diagram(const LinComb& f) {
    if (f.inputs() != 2 || f.outputs() != 2)
        throw ArityMismatch("closure needs signature 2 -> 2");
    LinComb open = parse_expr("cup ; id(1) * cup * id(1)");
    LinComb shut = parse_expr("id(1) * cap * id(1) ; cap");
    return compose(shut, compose(tensor(f, parse_expr("id(2)")), open));
}

/// Closures of jail, hourglass, H, I, X.
struct ClosureVector {
    Coords v{};

    const ScalarQ& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

/// Computed once by closing each basis word and reducing the closed diagram.
inline const ClosureVector& closure_vector() {
    static const ClosureVector cv = [] {
        ClosureVector c;
        for (int i = 0; i < kTwoDim; ++i)
            c.v[static_cast<std::size_t>(i)] =
                reduce_closed(closure_diagram(parse_expr(basis_words()[static_cast<std::size_t>(i)])));
        return c;
    }();
    return cv;
}

inline ScalarQ closure(const TwoStrand& a) {
    const ClosureVector& cv = closure_vector();
    ScalarQ s;
    for (int i = 0; i < kTwoDim; ++i)
        if (!a[i].is_zero())
            s += a[i] * cv[i];
    return s;
}

/// Alternating horizontal and vertical twist counts; empty is the identity tangle.
using TwistWord = std::vector<int>;

inline TwistWord parse_twist_word(std::string_view text) {
    TwistWord w;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw ParseError("empty entry in twist word");
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(cur, &used);
        } catch (const std::exception&) {
            throw ParseError("bad twist count '" + cur + "'");
        }
        if (used != cur.size() || n == 0)
            throw ParseError("bad twist count '" + cur + "'");
        w.push_back(n);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else if (ch != ' ')
            cur += ch;
    }
    if (!cur.empty() || !w.empty())
        flush();
    return w;
}

/// X^n, with negative n using the inverse crossing.
inline TwoStrand crossing_power(int n) {
    return n >= 0 ? power(TwoStrand::basis(kXIndex), n) : power(xminus(), -n);
}

/// Odd positions twist horizontally (stacked on top), even positions vertically.
inline TwoStrand tangle_element(const TwistWord& w) {
    TwoStrand t = TwoStrand::basis(kJail);
    for (std::size_t i = 0; i < w.size(); ++i) {
        TwoStrand x = crossing_power(w[i]);
        t = i % 2 == 0 ? mul(x, t) : rot2(mul(x, rot2(t)));
    }
    return t;
}

/// Framed, unoriented invariant of the closure of the tangle.
inline ScalarQ link_invariant(const TwistWord& w) { return closure(tangle_element(w)); }

struct ConsistencyLine {
    std::string name;
    ScalarQ lhs;
    ScalarQ rhs;
    bool ok() const { return lhs == rhs; }
};

struct ConsistencyReport {
    std::vector<ConsistencyLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok())
                return false;
        return true;
    }
};

/// Ties the idempotents, their eigenvalues and the closure map to the quantum dimensions.
inline ConsistencyReport trace_consistency_report() {
    ConsistencyReport r;
    const auto& es = idempotents();
    auto ev = crossing_eigenvalues();
    ScalarQ total, weighted;
    for (std::size_t i = 0; i < es.size(); ++i) {
        ScalarQ d = qdim(es[i].weight);
        total += d;
        weighted += ev[i] * d;
        r.lines.push_back({"closure(e_" + es[i].name + ") = qdim", closure(es[i].e), d});
    }
    r.lines.push_back({"sum of qdim = delta^2", total, loop_value() * loop_value()});
    r.lines.push_back({"sum of c*qdim = closure(X)", weighted, closure(TwoStrand::basis(kXIndex))});
    return r;
}

} // namespace f4skein
