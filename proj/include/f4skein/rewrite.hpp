#pragma once
/**
 * @file rewrite.hpp
 * @brief Local relations as rewrite rules, and normalization strategies.
 *
 * A rule replaces a disk: a face of the diagram (or two adjacent faces, or a
 * single node) together with the legs leaving it. Disks are compared by
 * canonical key against every rotation of the rule's left-hand side, so one
 * rule covers all its planar rotations. Rules involving crossings are also
 * registered in mirrored form with conjugated coefficients.
 */

#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsl.hpp"
#include "relations.hpp"

namespace f4skein {

/// Rewriting stopped early. The partial result equals the input.
class StepBudgetExhausted : public Error {
  public:
    StepBudgetExhausted(const std::string& what, LinComb partial) : Error(what), partial_(std::move(partial)) {}
    const LinComb& partial() const { return partial_; }

  private:
    LinComb partial_;
};

inline constexpr long kDefaultStepBudget = 100000;

/// Budget from F4SKEIN_STEP_BUDGET when set to a positive integer.
inline long default_step_budget() {
    if (const char* s = std::getenv("F4SKEIN_STEP_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultStepBudget;
}

struct RewriteRule {
    std::string name;
    std::string family;   // defining, derived or planar
    Diagram lhs;
    LinComb rhs;
    int complexity_drop = 0;
};

/// Order in which terms are expanded; also the termination measure.
enum class Measure {
    weighted,          // vertices + 3 * crossings
    crossings_first,   // crossings, then vertices
};

inline std::array<int, 2> measure_of(const Diagram& d, Measure m) {
    int c = d.crossing_count(), v = d.vertex_count();
    if (m == Measure::weighted)
        return {v + 3 * c, c};
    return {c, v};
}

namespace detail {

inline LinComb parse_rhs(int inputs, int outputs, const std::string& text) {
    if (text.empty())
        return LinComb(inputs, outputs);
    return parse_expr(text);
}

inline LinComb orbit_sum(std::string_view word) {
    LinComb base = parse_expr(word);
    int k = base.inputs() + base.outputs();
    LinComb r(base.inputs(), base.outputs());
    for (int i = 0; i < k; ++i)
        r += base.rotated(i);
    return r;
}

// A region to test against the rules: its nodes and which darts are interior.
struct Region {
    std::vector<int> nodes;
    std::vector<int> internal;   // darts whose edges lie inside the disk
};

// Legs of a region in counter-clockwise order, or empty if the region is not a disk.
inline std::vector<int> disk_legs(const Diagram& d, const Region& reg) {
    std::vector<char> inside(static_cast<std::size_t>(d.dart_count()), 0);
    for (int x : reg.internal)
        inside[static_cast<std::size_t>(x)] = 1;
    std::vector<int> legs;
    for (int v : reg.nodes)
        for (int s = 0; s < d.deg(v); ++s)
            if (!inside[static_cast<std::size_t>(d.dart(v, s))])
                legs.push_back(d.dart(v, s));
    if (legs.empty())
        return legs;
    std::vector<int> order;
    int start = legs.front(), x = start;
    std::size_t guard = 0, limit = 4 * static_cast<std::size_t>(d.dart_count()) + 8;
    do {
        order.push_back(x);
        int y = d.next_ccw(x);
        while (inside[static_cast<std::size_t>(y)]) {
            y = d.next_ccw(d.partner(y));
            if (++guard > limit)
                return {};
        }
        x = y;
        if (order.size() > legs.size())
            return {};
    } while (x != start);
    if (order.size() != legs.size())
        return {};
    return order;
}

// Faces not touching the boundary, as dart cycles.
inline std::vector<std::vector<int>> inner_faces(const Diagram& d) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(d.dart_count()), 0);
    for (int s = 0; s < d.dart_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> cyc;
        bool boundary = false;
        int x = s;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            boundary |= d.is_port(x);
            cyc.push_back(x);
            x = d.next_ccw(d.partner(x));
        } while (x != s);
        if (!boundary)
            out.push_back(std::move(cyc));
    }
    return out;
}

inline bool distinct_nodes(const Diagram& d, const std::vector<int>& cyc, std::vector<int>& nodes) {
    nodes.clear();
    for (int x : cyc)
        nodes.push_back(d.node_of(x));
    std::vector<int> s = nodes;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

} // namespace detail

/// True when some inner face has at most `cap` sides.
inline bool has_small_face(const Diagram& d, int cap) {
    for (const auto& f : detail::inner_faces(d))
        if (static_cast<int>(f.size()) <= cap)
            return true;
    return false;
}

/// Ordered rules with their rotation index and strategy parameters.
class RulePack {
  public:
    struct Hit {
        int rule;
        int rot;
    };

    RulePack(std::string name, Measure m, int face_cap) : name_(std::move(name)), measure_(m), face_cap_(face_cap) {}

    const std::string& name() const { return name_; }
    Measure measure() const { return measure_; }
    /// Inner faces up to this size should not survive normalization.
    int face_cap() const { return face_cap_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    /// Adds a local rule; with_mirror also adds its image under the bar functor.
    void add(const std::string& name, const std::string& family, std::string_view lhs, const LinComb& rhs,
             bool with_mirror) {
        Diagram l = parse_expr(lhs).begin()->second.diagram;
        add_rule(RewriteRule{name, family, l, rhs, drop(l, rhs)});
        if (with_mirror)
            add_rule(RewriteRule{name + "~", family, l.mirrored(), rhs.mirrored(), drop(l, rhs)});
    }

    /// A rule applied only to a whole diagram with exactly this boundary.
    void add_whole(const std::string& name, const std::string& family, std::string_view lhs, const LinComb& rhs) {
        Diagram l = parse_expr(lhs).begin()->second.diagram;
        whole_.emplace(l.key(), static_cast<int>(rules_.size()));
        rules_.push_back(RewriteRule{name, family, l, rhs, drop(l, rhs)});
        rhs_.emplace_back();
    }

    std::optional<Hit> lookup(const DiagramKey& disk) const {
        auto it = index_.find(disk);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }
    std::optional<int> lookup_whole(const DiagramKey& k) const {
        auto it = whole_.find(k);
        if (it == whole_.end())
            return std::nullopt;
        return it->second;
    }
    /// Right-hand side of a rule as disks, rotated to match rotation r of its left-hand side.
    const std::vector<LinComb::Term>& rhs_disks(int rule, int r) const {
        return rhs_[static_cast<std::size_t>(rule)][static_cast<std::size_t>(r)];
    }
    bool wants(int vertices, int crossings) const { return shapes_.count({vertices, crossings}) > 0; }
    bool wants_pairs() const { return pairs_; }
    bool wants_singletons() const { return singletons_; }

  private:
    static int drop(const Diagram& l, const LinComb& rhs) {
        int before = measure_of(l, Measure::weighted)[0], after = 0;
        for (const auto& [k, t] : rhs)
            after = std::max(after, measure_of(t.diagram, Measure::weighted)[0]);
        return before - after;
    }

    void add_rule(RewriteRule r) {
        if (r.lhs.inputs() != r.rhs.inputs() || r.lhs.outputs() != r.rhs.outputs())
            throw ArityMismatch("rule " + r.name + ": sides have different boundaries");
        int idx = static_cast<int>(rules_.size());
        int k = r.lhs.ports();
        Diagram disk = r.lhs.with_signature(k, 0);
        std::vector<std::vector<LinComb::Term>> rots;
        for (int rot = 0; rot < k; ++rot) {
            index_.try_emplace(disk.rotated(rot).key(), Hit{idx, rot});
            std::vector<LinComb::Term> terms;
            for (const auto& [key, t] : r.rhs)
                terms.push_back({t.diagram.with_signature(k, 0).rotated(rot), t.coeff});
            rots.push_back(std::move(terms));
        }
        int v = r.lhs.vertex_count(), c = r.lhs.crossing_count();
        shapes_.insert({v, c});
        // interior edges tell which kind of region the left-hand side is
        int edges = 0;
        for (int x = r.lhs.ports(); x < r.lhs.dart_count(); ++x)
            if (!r.lhs.is_port(r.lhs.partner(x)))
                ++edges;
        edges /= 2;
        if (edges == 0)
            singletons_ = true;
        if (edges > v + c)
            pairs_ = true;
        rules_.push_back(std::move(r));
        rhs_.push_back(std::move(rots));
    }

    std::string name_;
    Measure measure_;
    int face_cap_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<std::vector<LinComb::Term>>> rhs_;
    std::unordered_map<DiagramKey, Hit, DiagramKeyHash> index_;
    std::unordered_map<DiagramKey, int, DiagramKeyHash> whole_;
    std::set<std::pair<int, int>> shapes_;
    bool pairs_ = false;
    bool singletons_ = false;
};

/// One rule application found in a diagram.
struct Match {
    int rule = -1;
    int rot = 0;
    std::vector<int> nodes;
    std::vector<int> legs;
};

/// Highest-priority match in d; ties go to the region found first.
inline std::optional<Match> find_match(const Diagram& d, const RulePack& pack) {
    if (auto w = pack.lookup_whole(d.key()))
        return Match{*w, 0, {}, {}};
    std::optional<Match> best;
    auto consider = [&](const detail::Region& reg) {
        int v = 0, c = 0;
        for (int n : reg.nodes)
            (d.kind(n) == NodeKind::crossing ? c : v)++;
        if (!pack.wants(v, c))
            return;
        auto legs = detail::disk_legs(d, reg);
        if (legs.empty())
            return;
        auto hit = pack.lookup(d.extract(reg.nodes, legs).key());
        if (!hit || (best && best->rule <= hit->rule))
            return;
        best = Match{hit->rule, hit->rot, reg.nodes, std::move(legs)};
    };

    auto faces = detail::inner_faces(d);
    std::vector<int> face_of(static_cast<std::size_t>(d.dart_count()), -1);
    std::vector<char> simple(faces.size(), 0);
    std::vector<int> nodes;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        for (int x : faces[f])
            face_of[static_cast<std::size_t>(x)] = static_cast<int>(f);
        if (faces[f].size() > 6 || !detail::distinct_nodes(d, faces[f], nodes))
            continue;
        simple[f] = 1;
        detail::Region reg{nodes, {}};
        for (int x : faces[f]) {
            reg.internal.push_back(x);
            reg.internal.push_back(d.partner(x));
        }
        consider(reg);
    }
    if (pack.wants_pairs()) {
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!simple[f] || faces[f].size() > 4)
                continue;
            for (int x : faces[f]) {
                int g = face_of[static_cast<std::size_t>(d.partner(x))];
                if (g <= static_cast<int>(f) || !simple[static_cast<std::size_t>(g)] ||
                    faces[static_cast<std::size_t>(g)].size() > 4)
                    continue;
                detail::Region reg;
                for (int y : faces[f])
                    reg.nodes.push_back(d.node_of(y));
                for (int y : faces[static_cast<std::size_t>(g)])
                    reg.nodes.push_back(d.node_of(y));
                std::sort(reg.nodes.begin(), reg.nodes.end());
                reg.nodes.erase(std::unique(reg.nodes.begin(), reg.nodes.end()), reg.nodes.end());
                if (reg.nodes.size() + 2 != faces[f].size() + faces[static_cast<std::size_t>(g)].size())
                    continue;
                for (int y : faces[f]) {
                    reg.internal.push_back(y);
                    reg.internal.push_back(d.partner(y));
                }
                for (int y : faces[static_cast<std::size_t>(g)]) {
                    reg.internal.push_back(y);
                    reg.internal.push_back(d.partner(y));
                }
                consider(reg);
            }
        }
    }
    if (pack.wants_singletons())
        for (int v = 0; v < d.node_count(); ++v)
            consider(detail::Region{{v}, {}});
    return best;
}

/// Result of applying one match: a combination equal to d.
inline LinComb apply_match(const Diagram& d, const RulePack& pack, const Match& m) {
    const RewriteRule& rule = pack.rules()[static_cast<std::size_t>(m.rule)];
    if (m.legs.empty() && m.nodes.empty())
        return rule.rhs;
    LinComb out(d.inputs(), d.outputs());
    for (const auto& t : pack.rhs_disks(m.rule, m.rot))
        out.add(d.splice(m.nodes, m.legs, t.diagram), t.coeff);
    return out;
}

struct NormalizeResult {
    LinComb reduced;
    bool irreducible = false;
};

/// Worklist rewriting: terms are expanded largest first so equal diagrams merge before expansion.
class Normalizer {
  public:
    Normalizer(const RulePack& pack, long budget = default_step_budget()) : pack_(pack), budget_(budget) {}

    long steps() const { return steps_; }

    NormalizeResult run(const LinComb& f) {
        LinComb done(f.inputs(), f.outputs());
        Pending pending;
        auto insert = [&](const Diagram& d, ScalarQ c) {
            Diagram cd = d.canonical();
            if (cd.loops()) {
                c *= loop_value().pow(cd.loops());
                cd = cd.with_extra_loops(-cd.loops());
            }
            DiagramKey k = cd.serialize();
            if (normal_.count(k)) {
                done.add_canonical(std::move(k), std::move(cd), c);
                return;
            }
            auto pk = std::make_pair(measure_of(cd, pack_.measure()), std::move(k));
            auto it = pending.find(pk);
            if (it == pending.end()) {
                if (!c.is_zero())
                    pending.emplace(std::move(pk), LinComb::Term{std::move(cd), std::move(c)});
                return;
            }
            it->second.coeff += c;
            if (it->second.coeff.is_zero())
                pending.erase(it);
        };
        for (const auto& [k, t] : f)
            insert(t.diagram, t.coeff);

        while (!pending.empty()) {
            auto node = pending.extract(pending.begin());
            const DiagramKey& key = node.key().second;
            LinComb::Term& term = node.mapped();
            const LinComb* step = expansion(key, term.diagram);
            if (!step) {
                normal_.insert(key);
                done.add_canonical(key, term.diagram, term.coeff);
                continue;
            }
            if (++steps_ > budget_) {
                LinComb partial = done;
                partial.add_canonical(key, term.diagram, term.coeff);
                for (auto& [pk, t] : pending)
                    partial.add_canonical(pk.second, t.diagram, t.coeff);
                throw StepBudgetExhausted("step budget of " + std::to_string(budget_) + " rewrites exhausted",
                                          std::move(partial));
            }
            for (const auto& [k, t] : *step)
                insert(t.diagram, term.coeff * t.coeff);
        }

        NormalizeResult r{done, false};
        for (const auto& [k, t] : done) {
            const Diagram& d = t.diagram;
            if ((d.ports() == 0 && d.node_count() > 0) || has_small_face(d, pack_.face_cap()))
                r.irreducible = true;
        }
        return r;
    }

  private:
    using Pending = std::map<std::pair<std::array<int, 2>, DiagramKey>, LinComb::Term, std::greater<>>;

    const LinComb* expansion(const DiagramKey& key, const Diagram& d) {
        auto it = memo_.find(key);
        if (it != memo_.end())
            return &it->second;
        auto m = find_match(d, pack_);
        if (!m)
            return nullptr;
        return &memo_.emplace(key, apply_match(d, pack_, *m)).first->second;
    }

    const RulePack& pack_;
    long budget_;
    long steps_ = 0;
    std::unordered_map<DiagramKey, LinComb, DiagramKeyHash> memo_;
    std::set<DiagramKey> normal_;
};

namespace packs {

inline ScalarQ scalar(std::string_view s) { return ScalarQ::parse(s); }

inline LinComb word(std::string_view s) { return parse_expr(s); }

/// c0 jail + c1 hourglass + c2 H + c3 I + c4 last.
inline LinComb two_strand(const std::array<std::string_view, 5>& c, std::string_view last) {
    using namespace relations;
    return scalar(c[0]) * word(kJail) + scalar(c[1]) * word(kHourglass) + scalar(c[2]) * word(kH) +
           scalar(c[3]) * word(kI) + scalar(c[4]) * word(last);
}

inline LinComb skein_difference() {
    using namespace relations;
    return scalar(kZ) * (word(kJail) - word(kHourglass) + word(kH) - word(kI));
}

inline void add_planar_faces(RulePack& p) {
    using namespace relations;
    p.add("lollipop", "defining", kLollipop, LinComb(1, 0), false);
    p.add("bigon", "defining", kBigon, scalar(kPhi) * word("id(1)"), false);
    p.add("triangle", "derived", kTriangle, triangle_value() * word("merge"), false);
}

inline RulePack build_crossing() {
    using namespace relations;
    RulePack p("crossing", Measure::weighted, 5);
    p.add("lollipop", "defining", kLollipop, LinComb(1, 0), false);
    p.add("curl", "defining", kCurl, kink_value() * word("cap"), true);
    p.add("bigon", "defining", kBigon, scalar(kPhi) * word("id(1)"), false);
    p.add("slide", "defining", kSlide, twist_value() * word("merge"), true);
    p.add("reidemeister2", "defining", kReidemeister2, word(kJail), true);
    p.add("triangle", "derived", kTriangle, triangle_value() * word("merge"), false);
    // bottom crossing traded for its mirror through the skein relation
    LinComb clasp = word(kJail) + scalar(kZ) * (word("x+") - word("cap ; cup ; x+") +
                                                word("split * id(1) ; id(1) * merge ; x+") - word("merge ; split ; x+"));
    p.add("clasp", "derived", kClasp, clasp, true);
    LinComb dotted = scalar(kDottedScale).pow(-1) * two_strand(kDottedCoeffs, kX);
    p.add("dotted", "defining", kDotted, dotted, true);
    p.add("square", "defining", kSquare, two_strand(kSquareCoeffs, kX), true);
    LinComb pent = scalar(kPentagonCoeffs[0]) * detail::orbit_sum(kPentTree) +
                   scalar(kPentagonCoeffs[1]) * detail::orbit_sum(kPentArc) +
                   scalar(kPentagonCoeffs[2]) * detail::orbit_sum(kPentCrossed);
    p.add("pentagon", "defining", kPentagon, pent, false);
    p.add_whole("negative", "defining", "x-", word(kX) - skein_difference());
    return p;
}

inline RulePack build_planar() {
    using namespace relations;
    RulePack p("planar", Measure::crossings_first, 3);
    add_planar_faces(p);
    LinComb pent = scalar(kPlanarPentagonCoeffs[0]) * detail::orbit_sum(kPentTree) +
                   scalar(kPlanarPentagonCoeffs[1]) * detail::orbit_sum(kPentArc) +
                   scalar(kPlanarPentagonCoeffs[2]) * detail::orbit_sum(kPentSquare);
    p.add("planar-pentagon", "planar", kPentagon, pent, false);
    p.add("ladder", "planar", kLadder, two_strand(kLadderCoeffs, kSquare), false);
    return p;
}

inline RulePack build_elimination() {
    using namespace relations;
    RulePack p("elimination", Measure::crossings_first, 0);
    p.add("eliminate", "planar", kX, two_strand(kCrossingPlanar, kSquare), true);
    return p;
}

} // namespace packs

/// Relations oriented toward fewer crossings and vertices; normal forms may contain crossings.
inline const RulePack& crossing_pack() {
    static const RulePack p = packs::build_crossing();
    return p;
}

/// Crossing-free relations; squares survive as basis elements.
inline const RulePack& planar_pack() {
    static const RulePack p = packs::build_planar();
    return p;
}

inline const RulePack& elimination_pack() {
    static const RulePack p = packs::build_elimination();
    return p;
}

inline NormalizeResult normalize(const LinComb& f, const RulePack& pack = crossing_pack(),
                                 long budget = default_step_budget()) {
    return Normalizer(pack, budget).run(f);
}

/// Replaces every crossing by its planar expansion.
inline LinComb eliminate_crossings(const LinComb& f, long budget = default_step_budget()) {
    return normalize(f, elimination_pack(), budget).reduced;
}

/// Crossing elimination followed by the planar relations.
inline NormalizeResult normalize_planar(const LinComb& f, long budget = default_step_budget()) {
    return normalize(eliminate_crossings(f, budget), planar_pack(), budget);
}

enum class Strategy { braided, planar };

/// Scalar value of a closed diagram combination.
inline ScalarQ reduce_closed(const LinComb& f, Strategy strategy = Strategy::braided,
                             long budget = default_step_budget()) {
    if (f.inputs() != 0 || f.outputs() != 0)
        throw ArityMismatch("reduce_closed needs a diagram with no boundary");
    auto split_off = [](const LinComb& g, ScalarQ& value) {
        LinComb rest(0, 0);
        for (const auto& [k, t] : g) {
            if (t.diagram.node_count() == 0 && t.diagram.loops() == 0)
                value += t.coeff;
            else
                rest.add_canonical(k, t.diagram, t.coeff);
        }
        return rest;
    };
    ScalarQ value;
    LinComb cur = f;
    bool planar = strategy == Strategy::planar;
    for (int round = 0; round < 4 && !cur.is_zero(); ++round) {
        cur = planar ? normalize_planar(cur, budget).reduced : normalize(cur, crossing_pack(), budget).reduced;
        cur = split_off(cur, value);
        planar = !planar;
    }
    if (!cur.is_zero())
        throw IrreducibleDiagram("closed diagram left with " + std::to_string(cur.size()) +
                                 " unreduced terms, first: " + print_diagram(cur.begin()->second.diagram));
    return value;
}

} // namespace f4skein
