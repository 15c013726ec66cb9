#pragma once

#include <map>
#include <string>
#include <utility>

#include "diagram.hpp"
#include "qring.hpp"

namespace f4skein {

/// Finite Q(q)-linear combination of canonical diagrams sharing one signature.
class LinComb {
  public:
    struct Term {
        Diagram diagram;
        ScalarQ coeff;
    };
    using Map = std::map<DiagramKey, Term>;

    LinComb() = default;
    LinComb(int inputs, int outputs) : m_(inputs), n_(outputs) {}
    LinComb(const Diagram& d, const ScalarQ& c = ScalarQ(1)) : m_(d.inputs()), n_(d.outputs()) { add(d, c); }

    int inputs() const { return m_; }
    int outputs() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }

    void add(const Diagram& d, const ScalarQ& c) {
        Diagram cd = d.canonical();
        DiagramKey k = cd.serialize();
        add_canonical(std::move(k), std::move(cd), c);
    }

    void add_canonical(DiagramKey k, Diagram cd, const ScalarQ& c) {
        if (cd.inputs() != m_ || cd.outputs() != n_)
            throw ArityMismatch("term " + std::to_string(cd.inputs()) + "->" + std::to_string(cd.outputs()) +
                                " added to combination " + std::to_string(m_) + "->" + std::to_string(n_));
        if (c.is_zero())
            return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), Term{std::move(cd), c});
            return;
        }
        it->second.coeff += c;
        if (it->second.coeff.is_zero())
            terms_.erase(it);
    }

    ScalarQ coefficient(const DiagramKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? ScalarQ() : it->second.coeff;
    }
    ScalarQ coefficient(const Diagram& d) const { return coefficient(d.key()); }

    LinComb& operator+=(const LinComb& o) {
        check_same(o);
        for (const auto& [k, t] : o.terms_)
            add_canonical(k, t.diagram, t.coeff);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        check_same(o);
        for (const auto& [k, t] : o.terms_)
            add_canonical(k, t.diagram, -t.coeff);
        return *this;
    }
    LinComb& operator*=(const ScalarQ& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, t] : terms_)
            t.coeff *= c;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const ScalarQ& c, LinComb a) { return a *= c; }
    LinComb operator-() const { return ScalarQ(-1) * *this; }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_ || a.terms_.size() != b.terms_.size())
            return false;
        for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || !(ia->second.coeff == ib->second.coeff))
                return false;
        return true;
    }

    /// top after bottom, bilinearly.
    friend LinComb compose(const LinComb& top, const LinComb& bottom) {
        if (bottom.n_ != top.m_)
            throw ArityMismatch("cannot compose: " + std::to_string(bottom.n_) + " outputs into " +
                                std::to_string(top.m_) + " inputs");
        LinComb r(bottom.m_, top.n_);
        for (const auto& [ka, a] : top.terms_)
            for (const auto& [kb, b] : bottom.terms_)
                r.add(compose(a.diagram, b.diagram), a.coeff * b.coeff);
        return r;
    }
    friend LinComb tensor(const LinComb& left, const LinComb& right) {
        LinComb r(left.m_ + right.m_, left.n_ + right.n_);
        for (const auto& [ka, a] : left.terms_)
            for (const auto& [kb, b] : right.terms_)
                r.add(tensor(a.diagram, b.diagram), a.coeff * b.coeff);
        return r;
    }

    LinComb rotated(int k = 1) const {
        LinComb r(m_, n_);
        for (const auto& [key, t] : terms_)
            r.add(t.diagram.rotated(k), t.coeff);
        return r;
    }

    /// Mirror every crossing and conjugate every coefficient.
    LinComb mirrored() const {
        LinComb r(m_, n_);
        for (const auto& [key, t] : terms_)
            r.add(t.diagram.mirrored(), t.coeff.bar());
        return r;
    }

    LinComb with_signature(int inputs, int outputs) const {
        LinComb r(inputs, outputs);
        for (const auto& [key, t] : terms_)
            r.add(t.diagram.with_signature(inputs, outputs), t.coeff);
        return r;
    }

  private:
    void check_same(const LinComb& o) const {
        if (o.m_ != m_ || o.n_ != n_)
            throw ArityMismatch("adding combinations of different signatures");
    }

    int m_ = 0, n_ = 0;
    Map terms_;
};

/// Rot on combinations; defined for signatures with inputs and outputs.
inline LinComb rot(const LinComb& f) {
    if (f.inputs() < 1 || f.outputs() < 1)
        throw ArityMismatch("rotation needs at least one input and one output");
    return f.rotated(1);
}

inline LinComb xi(const LinComb& f) { return f.mirrored(); }

} // namespace f4skein
