#pragma once
/**
 * @file diagram.hpp
 * @brief Planar trivalent graphs with crossings, up to planar isotopy.
 *
 * A diagram is a rotation system. Ports are the boundary points of the disk,
 * numbered counter-clockwise: bottom ports left to right, then top ports
 * right to left. Node slots are numbered counter-clockwise. For a crossing
 * the over strand occupies slots 0 and 2.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace f4skein {

enum class NodeKind : std::uint8_t { vertex = 0, crossing = 1 };

constexpr int degree(NodeKind k) { return k == NodeKind::vertex ? 3 : 4; }

struct DiagramKey {
    std::vector<int> code;

    auto operator<=>(const DiagramKey&) const = default;
    bool operator==(const DiagramKey&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (i)
                out += (i == 4 ? ':' : '.');
            out += std::to_string(code[i]);
        }
        return out;
    }
};

inline std::ostream& operator<<(std::ostream& os, const DiagramKey& k) { return os << k.to_string(); }

struct DiagramKeyHash {
    std::size_t operator()(const DiagramKey& k) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : k.code)
            h = (h ^ static_cast<std::size_t>(v + 0x9e3779b9)) * 1099511628211ull;
        return h;
    }
};

class Diagram;

namespace detail {

/**
 * Scratch graph used to assemble diagrams. Transparent darts come in linked
 * pairs and are spliced out on finish: a chain partner, link, partner, ...
 * is followed until a real dart is reached. Cycles of transparent darts
 * become free loops.
 */
class Builder {
  public:
    int add_dart() {
        partner_.push_back(-1);
        link_.push_back(-1);
        node_of_.push_back(-1);
        return static_cast<int>(partner_.size()) - 1;
    }
    int add_node(NodeKind k) {
        int first = static_cast<int>(partner_.size());
        kinds_.push_back(k);
        firsts_.push_back(first);
        int id = static_cast<int>(kinds_.size()) - 1;
        for (int s = 0; s < degree(k); ++s) {
            add_dart();
            node_of_.back() = id;
        }
        return id;
    }
    int node_dart(int node, int slot) const { return firsts_[static_cast<std::size_t>(node)] + slot; }
    void connect(int a, int b) {
        partner_[static_cast<std::size_t>(a)] = b;
        partner_[static_cast<std::size_t>(b)] = a;
    }
    void glue(int a, int b) {
        link_[static_cast<std::size_t>(a)] = b;
        link_[static_cast<std::size_t>(b)] = a;
    }
    void set_ports(std::vector<int> ports) { ports_ = std::move(ports); }
    void add_loops(int k) { loops_ += k; }

    Diagram finish(int inputs, int outputs);

    /// Copies d; returns the builder dart id of every dart of d.
    std::vector<int> import(const Diagram& d);

  private:
    std::vector<int> partner_, link_, node_of_;
    std::vector<NodeKind> kinds_;
    std::vector<int> firsts_;
    std::vector<int> ports_;
    int loops_ = 0;
};

} // namespace detail

class Diagram {
  public:
    Diagram() = default;

    int inputs() const { return m_; }
    int outputs() const { return n_; }
    int ports() const { return m_ + n_; }
    int loops() const { return loops_; }
    int node_count() const { return static_cast<int>(kind_.size()); }
    int dart_count() const { return static_cast<int>(partner_.size()); }
    int crossing_count() const {
        return static_cast<int>(std::count(kind_.begin(), kind_.end(), NodeKind::crossing));
    }
    int vertex_count() const { return node_count() - crossing_count(); }

    NodeKind kind(int node) const { return kind_[static_cast<std::size_t>(node)]; }
    int deg(int node) const { return degree(kind(node)); }
    int dart(int node, int slot) const { return first_[static_cast<std::size_t>(node)] + slot; }
    int partner(int d) const { return partner_[static_cast<std::size_t>(d)]; }
    /// Owning node of a dart, or -1 for a port.
    int node_of(int d) const { return d < ports() ? -1 : node_of_[static_cast<std::size_t>(d - ports())]; }
    int slot_of(int d) const { return d < ports() ? d : d - first_[static_cast<std::size_t>(node_of(d))]; }
    bool is_port(int d) const { return d < ports(); }

    /// Port index of bottom position j (left to right).
    int bottom_port(int j) const { return j; }
    /// Port index of top position j (left to right).
    int top_port(int j) const { return m_ + (n_ - 1 - j); }

    /// Counter-clockwise successor of a dart around its node; for ports the boundary order is reversed.
    int next_ccw(int d) const {
        if (is_port(d))
            return (d + ports() - 1) % ports();
        int nd = node_of(d);
        return dart(nd, (slot_of(d) + 1) % deg(nd));
    }

    static Diagram identity(int n) {
        detail::Builder b;
        std::vector<int> bot, top;
        for (int i = 0; i < n; ++i)
            bot.push_back(b.add_dart());
        for (int i = 0; i < n; ++i)
            top.push_back(b.add_dart());
        for (int i = 0; i < n; ++i)
            b.connect(bot[static_cast<std::size_t>(i)], top[static_cast<std::size_t>(n - 1 - i)]);
        std::vector<int> ports = bot;
        ports.insert(ports.end(), top.begin(), top.end());
        b.set_ports(ports);
        return b.finish(n, n);
    }
    static Diagram empty() { return identity(0); }

    /// Single node whose slots s, s+1, ... meet the ports in counter-clockwise order.
    static Diagram single_node(NodeKind k, int inputs, int outputs, int first_slot = 0) {
        if (inputs + outputs != degree(k))
            throw ArityMismatch("node needs " + std::to_string(degree(k)) + " legs");
        detail::Builder b;
        std::vector<int> ports;
        for (int i = 0; i < degree(k); ++i)
            ports.push_back(b.add_dart());
        int v = b.add_node(k);
        for (int i = 0; i < degree(k); ++i)
            b.connect(ports[static_cast<std::size_t>(i)], b.node_dart(v, (first_slot + i) % degree(k)));
        b.set_ports(ports);
        return b.finish(inputs, outputs);
    }
    static Diagram merge() { return single_node(NodeKind::vertex, 2, 1); }
    static Diagram split() { return single_node(NodeKind::vertex, 1, 2, 2); }
    /// Positive crossing: the strand from bottom left to top right is over.
    static Diagram crossing(bool positive) { return single_node(NodeKind::crossing, 2, 2, positive ? 0 : 3); }
    static Diagram cup() { return cup_cap(0, 2); }
    static Diagram cap() { return cup_cap(2, 0); }
    static Diagram loop() {
        Diagram d = empty();
        d.loops_ = 1;
        return d;
    }

    /// top after bottom.
    friend Diagram compose(const Diagram& top, const Diagram& bottom);
    friend Diagram tensor(const Diagram& left, const Diagram& right);

    /// Cyclic relabeling of ports: port i becomes port i + k. Keeps the signature.
    Diagram rotated(int k = 1) const {
        Diagram r = *this;
        int P = ports();
        if (P == 0)
            return r;
        k = ((k % P) + P) % P;
        auto map = [&](int d) { return d < P ? (d + k) % P : d; };
        for (int d = 0; d < dart_count(); ++d)
            r.partner_[static_cast<std::size_t>(map(d))] = map(partner(d));
        return r;
    }

    /// Same counter-clockwise boundary read with a different split into inputs and outputs.
    Diagram with_signature(int inputs, int outputs) const {
        if (inputs + outputs != ports())
            throw ArityMismatch("signature change must keep the port count");
        Diagram r = *this;
        r.m_ = inputs;
        r.n_ = outputs;
        return r;
    }

    /// Exchanges over and under strands at every crossing.
    Diagram mirrored() const {
        Diagram r = *this;
        std::vector<int> remap(static_cast<std::size_t>(dart_count()));
        std::iota(remap.begin(), remap.end(), 0);
        for (int v = 0; v < node_count(); ++v)
            if (kind(v) == NodeKind::crossing)
                for (int s = 0; s < 4; ++s)
                    remap[static_cast<std::size_t>(dart(v, (s + 1) % 4))] = dart(v, s);
        for (int d = 0; d < dart_count(); ++d)
            r.partner_[static_cast<std::size_t>(remap[static_cast<std::size_t>(d)])] =
                remap[static_cast<std::size_t>(partner(d))];
        return r;
    }

    Diagram with_extra_loops(int k) const {
        Diagram r = *this;
        r.loops_ += k;
        return r;
    }

    /// Canonical relabeling; isomorphic diagrams give identical results.
    Diagram canonical() const;
    DiagramKey key() const { return canonical().serialize(); }
    /// Key of an already canonical diagram.
    DiagramKey serialize() const {
        DiagramKey k;
        auto& c = k.code;
        c.reserve(5 + kind_.size() + partner_.size());
        c.push_back(m_);
        c.push_back(n_);
        c.push_back(loops_);
        c.push_back(node_count());
        for (auto kd : kind_)
            c.push_back(static_cast<int>(kd));
        c.insert(c.end(), partner_.begin(), partner_.end());
        return k;
    }

    /// Nodes of the component containing each node; boundary component first.
    std::vector<int> component_of_nodes() const;

    /**
     * Boundary darts of a node set in counter-clockwise order around it, or
     * empty when the nodes do not form a disk with all legs outside.
     */
    std::vector<int> region_boundary(const std::vector<int>& nodes) const;

    /// The nodes as a diagram with ports in the order given by their outer legs.
    Diagram extract(const std::vector<int>& nodes, const std::vector<int>& legs) const;

    /**
     * Replaces the nodes by the diagram r; port t of r is glued to legs[t].
     * Ports of r are read counter-clockwise regardless of its signature.
     */
    Diagram splice(const std::vector<int>& nodes, const std::vector<int>& legs, const Diagram& r) const;

    /// Diagram without its closed components and loops, and the closed parts as separate 0 -> 0 diagrams.
    std::pair<Diagram, std::vector<Diagram>> split_closed() const;

  private:
    friend class detail::Builder;

    static Diagram cup_cap(int inputs, int outputs) {
        detail::Builder b;
        int a = b.add_dart(), c = b.add_dart();
        b.connect(a, c);
        b.set_ports({a, c});
        return b.finish(inputs, outputs);
    }

    int m_ = 0, n_ = 0, loops_ = 0;
    std::vector<NodeKind> kind_;
    std::vector<int> first_;
    std::vector<int> partner_;
    std::vector<int> node_of_; // indexed by dart - ports()
};

namespace detail {

inline std::vector<int> Builder::import(const Diagram& d) {
    std::vector<int> map(static_cast<std::size_t>(d.dart_count()), -1);
    for (int p = 0; p < d.ports(); ++p)
        map[static_cast<std::size_t>(p)] = add_dart();
    for (int v = 0; v < d.node_count(); ++v) {
        int nv = add_node(d.kind(v));
        for (int s = 0; s < d.deg(v); ++s)
            map[static_cast<std::size_t>(d.dart(v, s))] = node_dart(nv, s);
    }
    for (int x = 0; x < d.dart_count(); ++x)
        partner_[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] =
            map[static_cast<std::size_t>(d.partner(x))];
    loops_ += d.loops();
    return map;
}

inline Diagram Builder::finish(int inputs, int outputs) {
    const std::size_t D = partner_.size();
    std::vector<int> newid(D, -1);
    Diagram out;
    out.m_ = inputs;
    out.n_ = outputs;
    int next = 0;
    for (int p : ports_)
        newid[static_cast<std::size_t>(p)] = next++;
    for (std::size_t v = 0; v < kinds_.size(); ++v) {
        out.kind_.push_back(kinds_[v]);
        out.first_.push_back(next);
        for (int s = 0; s < degree(kinds_[v]); ++s) {
            newid[static_cast<std::size_t>(firsts_[v] + s)] = next++;
            out.node_of_.push_back(static_cast<int>(v));
        }
    }
    out.partner_.assign(static_cast<std::size_t>(next), -1);
    std::vector<char> seen(D, 0);
    for (std::size_t d = 0; d < D; ++d) {
        if (newid[d] < 0)
            continue;
        int x = partner_[d];
        while (x >= 0 && link_[static_cast<std::size_t>(x)] >= 0) {
            seen[static_cast<std::size_t>(x)] = 1;
            int y = link_[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(y)] = 1;
            x = partner_[static_cast<std::size_t>(y)];
        }
        if (x < 0 || newid[static_cast<std::size_t>(x)] < 0)
            throw Error("internal: dangling dart while assembling diagram");
        out.partner_[static_cast<std::size_t>(newid[d])] = newid[static_cast<std::size_t>(x)];
    }
    out.loops_ = loops_;
    for (std::size_t d = 0; d < D; ++d) {
        if (link_[d] < 0 || seen[d])
            continue;
        int x = static_cast<int>(d);
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            int y = link_[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(y)] = 1;
            x = partner_[static_cast<std::size_t>(y)];
        } while (x != static_cast<int>(d) && x >= 0 && !seen[static_cast<std::size_t>(x)]);
        ++out.loops_;
    }
    return out;
}

} // namespace detail

inline Diagram compose(const Diagram& top, const Diagram& bottom) {
    if (bottom.outputs() != top.inputs())
        throw ArityMismatch("cannot compose: " + std::to_string(bottom.outputs()) + " outputs into " +
                            std::to_string(top.inputs()) + " inputs");
    detail::Builder b;
    auto mb = b.import(bottom);
    auto mt = b.import(top);
    int k = top.inputs();
    for (int j = 0; j < k; ++j)
        b.glue(mb[static_cast<std::size_t>(bottom.top_port(j))], mt[static_cast<std::size_t>(top.bottom_port(j))]);
    std::vector<int> ports;
    for (int j = 0; j < bottom.inputs(); ++j)
        ports.push_back(mb[static_cast<std::size_t>(j)]);
    for (int j = top.inputs(); j < top.ports(); ++j)
        ports.push_back(mt[static_cast<std::size_t>(j)]);
    b.set_ports(ports);
    return b.finish(bottom.inputs(), top.outputs());
}

inline Diagram tensor(const Diagram& left, const Diagram& right) {
    detail::Builder b;
    auto ml = b.import(left);
    auto mr = b.import(right);
    std::vector<int> ports;
    for (int j = 0; j < left.inputs(); ++j)
        ports.push_back(ml[static_cast<std::size_t>(j)]);
    for (int j = 0; j < right.inputs(); ++j)
        ports.push_back(mr[static_cast<std::size_t>(j)]);
    for (int j = right.inputs(); j < right.ports(); ++j)
        ports.push_back(mr[static_cast<std::size_t>(j)]);
    for (int j = left.inputs(); j < left.ports(); ++j)
        ports.push_back(ml[static_cast<std::size_t>(j)]);
    b.set_ports(ports);
    return b.finish(left.inputs() + right.inputs(), left.outputs() + right.outputs());
}

namespace detail {

struct Traversal {
    std::vector<int> order;   // nodes in discovery order
    std::vector<int> entry;   // entry slot per discovered node (indexed like order)
};

// Breadth-first discovery from a list of seed darts; each node is entered at the first dart reaching it.
inline void discover(const Diagram& d, std::vector<int>& label, Traversal& t, std::size_t from) {
    for (std::size_t h = from; h < t.order.size(); ++h) {
        int v = t.order[h];
        int e = t.entry[h];
        int k = d.deg(v);
        for (int r = 0; r < k; ++r) {
            int p = d.partner(d.dart(v, (e + r) % k));
            int w = d.node_of(p);
            if (w >= 0 && label[static_cast<std::size_t>(w)] < 0) {
                label[static_cast<std::size_t>(w)] = static_cast<int>(t.order.size());
                t.order.push_back(w);
                t.entry.push_back(d.slot_of(p));
            }
        }
    }
}

inline void seed(const Diagram& d, std::vector<int>& label, Traversal& t, int dart_) {
    int w = d.node_of(dart_);
    if (w >= 0 && label[static_cast<std::size_t>(w)] < 0) {
        label[static_cast<std::size_t>(w)] = static_cast<int>(t.order.size());
        t.order.push_back(w);
        t.entry.push_back(d.slot_of(dart_));
    }
}

// Slot rotation applied when relabeling: crossings keep the over strand on even slots.
inline int base_slot(NodeKind k, int entry) { return k == NodeKind::crossing ? entry - entry % 2 : entry; }

} // namespace detail

inline std::vector<int> Diagram::component_of_nodes() const {
    std::vector<int> comp(static_cast<std::size_t>(node_count()), -1);
    int c = 0;
    // boundary component
    std::vector<int> stack;
    auto flood = [&](int start, int id) {
        stack.push_back(start);
        comp[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s = 0; s < deg(v); ++s) {
                int w = node_of(partner(dart(v, s)));
                if (w >= 0 && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    };
    bool any_boundary = false;
    for (int p = 0; p < ports(); ++p) {
        int w = node_of(partner(p));
        if (w >= 0 && comp[static_cast<std::size_t>(w)] < 0) {
            flood(w, 0);
            any_boundary = true;
        }
    }
    c = any_boundary ? 1 : 0;
    for (int v = 0; v < node_count(); ++v)
        if (comp[static_cast<std::size_t>(v)] < 0)
            flood(v, c++);
    return comp;
}

inline Diagram Diagram::canonical() const {
    const int N = node_count();
    std::vector<int> label(static_cast<std::size_t>(N), -1);
    detail::Traversal main;
    for (int p = 0; p < ports(); ++p) {
        std::size_t before = main.order.size();
        detail::seed(*this, label, main, partner(p));
        detail::discover(*this, label, main, before);
    }

    // closed components: minimal code over all starting darts
    struct Closed {
        std::vector<int> code;
        detail::Traversal t;
    };
    std::vector<Closed> closed;
    std::vector<char> done(static_cast<std::size_t>(N), 0);
    for (int v : main.order)
        done[static_cast<std::size_t>(v)] = 1;
    for (int v0 = 0; v0 < N; ++v0) {
        if (done[static_cast<std::size_t>(v0)])
            continue;
        std::vector<int> members;
        {
            std::vector<int> tmp(static_cast<std::size_t>(N), -1);
            detail::Traversal t;
            detail::seed(*this, tmp, t, dart(v0, 0));
            detail::discover(*this, tmp, t, 0);
            members = t.order;
        }
        Closed best;
        bool have = false;
        for (int v : members) {
            done[static_cast<std::size_t>(v)] = 1;
            for (int s = 0; s < deg(v); ++s) {
                std::vector<int> tmp(static_cast<std::size_t>(N), -1);
                detail::Traversal t;
                detail::seed(*this, tmp, t, dart(v, s));
                detail::discover(*this, tmp, t, 0);
                std::vector<int> code;
                code.push_back(static_cast<int>(t.order.size()));
                for (std::size_t h = 0; h < t.order.size(); ++h) {
                    int u = t.order[h];
                    int e = t.entry[h];
                    code.push_back(static_cast<int>(kind(u)) * 2 + (kind(u) == NodeKind::crossing ? e % 2 : 0));
                    for (int r = 0; r < deg(u); ++r) {
                        int p = partner(dart(u, (e + r) % deg(u)));
                        int w = node_of(p);
                        int lw = tmp[static_cast<std::size_t>(w)];
                        int ew = t.entry[static_cast<std::size_t>(lw)];
                        code.push_back(lw);
                        code.push_back((slot_of(p) - ew + deg(w)) % deg(w));
                    }
                }
                if (!have || code < best.code) {
                    best.code = std::move(code);
                    best.t = std::move(t);
                    have = true;
                }
            }
        }
        closed.push_back(std::move(best));
    }
    std::sort(closed.begin(), closed.end(), [](const Closed& a, const Closed& b) { return a.code < b.code; });

    std::vector<int> order = main.order, entry = main.entry;
    for (auto& c : closed) {
        order.insert(order.end(), c.t.order.begin(), c.t.order.end());
        entry.insert(entry.end(), c.t.entry.begin(), c.t.entry.end());
    }

    detail::Builder b;
    std::vector<int> map(static_cast<std::size_t>(dart_count()), -1);
    std::vector<int> ports_;
    for (int p = 0; p < ports(); ++p) {
        map[static_cast<std::size_t>(p)] = b.add_dart();
        ports_.push_back(map[static_cast<std::size_t>(p)]);
    }
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        int base = detail::base_slot(kind(v), entry[h]);
        int nv = b.add_node(kind(v));
        for (int s = 0; s < deg(v); ++s)
            map[static_cast<std::size_t>(dart(v, (base + s) % deg(v)))] = b.node_dart(nv, s);
    }
    for (int x = 0; x < dart_count(); ++x)
        b.connect(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(partner(x))]);
    b.set_ports(ports_);
    b.add_loops(loops_);
    return b.finish(m_, n_);
}

inline std::vector<int> Diagram::region_boundary(const std::vector<int>& nodes) const {
    std::vector<char> in(static_cast<std::size_t>(node_count()), 0);
    for (int v : nodes)
        in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> legs;
    for (int v : nodes)
        for (int s = 0; s < deg(v); ++s) {
            int w = node_of(partner(dart(v, s)));
            if (w < 0 || !in[static_cast<std::size_t>(w)])
                legs.push_back(dart(v, s));
        }
    if (legs.empty())
        return legs;
    // walk the outer boundary: external legs bounce back
    std::vector<int> order;
    int start = legs.front();
    int x = start;
    std::size_t guard = 0;
    do {
        order.push_back(x);
        int y = next_ccw(x);
        for (;;) {
            int w = node_of(partner(y));
            bool internal = w >= 0 && in[static_cast<std::size_t>(w)];
            if (!internal)
                break;
            y = next_ccw(partner(y));
            if (++guard > 100000)
                return {};
        }
        x = y;
        if (++guard > 100000)
            return {};
    } while (x != start);
    if (order.size() != legs.size())
        return {};
    std::vector<int> sorted_a = order, sorted_b = legs;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b)
        return {};
    return order;
}

inline Diagram Diagram::extract(const std::vector<int>& nodes, const std::vector<int>& legs) const {
    detail::Builder b;
    std::vector<int> ports;
    for (std::size_t i = 0; i < legs.size(); ++i)
        ports.push_back(b.add_dart());
    std::vector<int> map(static_cast<std::size_t>(dart_count()), -1);
    for (int v : nodes) {
        int nv = b.add_node(kind(v));
        for (int s = 0; s < deg(v); ++s)
            map[static_cast<std::size_t>(dart(v, s))] = b.node_dart(nv, s);
    }
    for (std::size_t i = 0; i < legs.size(); ++i)
        b.connect(ports[i], map[static_cast<std::size_t>(legs[i])]);
    for (int v : nodes)
        for (int s = 0; s < deg(v); ++s) {
            int x = dart(v, s);
            int p = partner(x);
            if (map[static_cast<std::size_t>(p)] >= 0 && !is_port(p) &&
                std::find(legs.begin(), legs.end(), x) == legs.end())
                b.connect(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(p)]);
        }
    b.set_ports(ports);
    return b.finish(static_cast<int>(legs.size()), 0);
}

inline Diagram Diagram::splice(const std::vector<int>& nodes, const std::vector<int>& legs, const Diagram& r) const {
    if (static_cast<int>(legs.size()) != r.ports())
        throw ArityMismatch("splice: replacement has the wrong number of ports");
    std::vector<char> drop(static_cast<std::size_t>(node_count()), 0);
    for (int v : nodes)
        drop[static_cast<std::size_t>(v)] = 1;
    detail::Builder b;
    std::vector<int> map(static_cast<std::size_t>(dart_count()), -1);
    std::vector<int> ports;
    for (int p = 0; p < this->ports(); ++p) {
        map[static_cast<std::size_t>(p)] = b.add_dart();
        ports.push_back(map[static_cast<std::size_t>(p)]);
    }
    for (int v = 0; v < node_count(); ++v) {
        if (drop[static_cast<std::size_t>(v)])
            continue;
        int nv = b.add_node(kind(v));
        for (int s = 0; s < deg(v); ++s)
            map[static_cast<std::size_t>(dart(v, s))] = b.node_dart(nv, s);
    }
    for (int leg : legs)
        map[static_cast<std::size_t>(leg)] = b.add_dart();
    for (int x = 0; x < dart_count(); ++x) {
        int mx = map[static_cast<std::size_t>(x)];
        int mp = map[static_cast<std::size_t>(partner(x))];
        if (mx >= 0 && mp >= 0)
            b.connect(mx, mp);
    }
    auto mr = b.import(r);
    for (std::size_t t = 0; t < legs.size(); ++t)
        b.glue(map[static_cast<std::size_t>(legs[t])], mr[t]);
    b.set_ports(ports);
    b.add_loops(loops_);
    return b.finish(m_, n_);
}

inline std::pair<Diagram, std::vector<Diagram>> Diagram::split_closed() const {
    auto comp = component_of_nodes();
    bool has_boundary_comp = false;
    for (int p = 0; p < ports(); ++p)
        if (node_of(partner(p)) >= 0)
            has_boundary_comp = true;
    int first_closed = has_boundary_comp ? 1 : 0;
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    auto build = [&](int id, bool with_ports) {
        detail::Builder b;
        std::vector<int> map(static_cast<std::size_t>(dart_count()), -1);
        std::vector<int> ports_;
        if (with_ports)
            for (int p = 0; p < ports(); ++p) {
                map[static_cast<std::size_t>(p)] = b.add_dart();
                ports_.push_back(map[static_cast<std::size_t>(p)]);
            }
        for (int v = 0; v < node_count(); ++v) {
            if (comp[static_cast<std::size_t>(v)] != id)
                continue;
            int nv = b.add_node(kind(v));
            for (int s = 0; s < deg(v); ++s)
                map[static_cast<std::size_t>(dart(v, s))] = b.node_dart(nv, s);
        }
        for (int x = 0; x < dart_count(); ++x)
            if (map[static_cast<std::size_t>(x)] >= 0)
                b.connect(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(partner(x))]);
        b.set_ports(ports_);
        return with_ports ? b.finish(m_, n_) : b.finish(0, 0);
    };
    Diagram open = build(has_boundary_comp ? 0 : -2, true);
    std::vector<Diagram> closed;
    for (int c = first_closed; c < ncomp; ++c)
        closed.push_back(build(c, false));
    for (int i = 0; i < loops_; ++i)
        closed.push_back(Diagram::loop());
    return {open, closed};
}

} // namespace f4skein
