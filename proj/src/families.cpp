#include "curvechi/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace curvechi {

const char* to_string(Part p) {
    switch (p) {
        case Part::L: return "L";
        case Part::M: return "M";
        case Part::R: return "R";
        case Part::Whole: return "W";
    }
    return "?";
}

const char* to_string(MemberShape s) {
    switch (s) {
        case MemberShape::OneCurve: return "one-curve";
        case MemberShape::Even: return "even";
        case MemberShape::Double: return "double";
    }
    return "?";
}

const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::OneCurve: return "one-curve";
        case FamilyKind::Even: return "even";
        case FamilyKind::TwoT: return "2t";
        case FamilyKind::LR: return "lr";
        case FamilyKind::LR2: return "lr2";
        case FamilyKind::Double: return "double";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "one-curve") return FamilyKind::OneCurve;
    if (s == "even") return FamilyKind::Even;
    if (s == "2t") return FamilyKind::TwoT;
    if (s == "lr") return FamilyKind::LR;
    if (s == "lr2") return FamilyKind::LR2;
    if (s == "double") return FamilyKind::Double;
    throw FormatError("unknown family kind \"" + s + "\"");
}

namespace {

// Exact vertices of the piece of c between two positions (from <= to).
Subcurve slice(const Polyline& c, const CurvePos& from, const CurvePos& to) {
    Subcurve out;
    out.push_back(c.at(from));
    for (std::size_t v = 0; v < c.size(); ++v) {
        const CurvePos pv = c.vertex_pos(v);
        if (from < pv && pv < to) out.emplace_back(c.points()[v]);
    }
    ExactPoint last = c.at(to);
    if (!(last == out.back())) out.push_back(std::move(last));
    return out;
}

Subcurve as_subcurve(const Polyline& c) {
    Subcurve out;
    for (const auto& p : c.points()) out.emplace_back(p);
    return out;
}

}  // namespace

EvenCurve decompose_even_curve(const Polyline& c) {
    if (c.front().y <= 0 || c.back().y <= 0) {
        throw GeometryError("even-curve " + c.id() + " must have both endpoints strictly above the baseline");
    }
    require_simple(c);
    auto bps = baseline_crossings_along(c);
    if (bps.empty()) throw FamilyError("curve " + c.id() + " never crosses the baseline");
    if (bps.size() % 2 != 0) {
        throw OddCrossingError("curve " + c.id() + " crosses the baseline " + std::to_string(bps.size()) + " times");
    }
    EvenCurve e;
    e.curve = c;
    e.basepoints = bps;
    const Basepoint& head = bps.front();
    const Basepoint& tail = bps.back();
    e.head_is_left = head.x < tail.x;
    const CurvePos start{0, Rational(0)};
    const CurvePos end = c.vertex_pos(c.size() - 1);
    Subcurve head_part = slice(c, start, head.pos);
    Subcurve tail_part = slice(c, tail.pos, end);
    e.middle = slice(c, head.pos, tail.pos);
    if (e.head_is_left) {
        e.left = std::move(head_part);
        e.right = std::move(tail_part);
    } else {
        e.left = std::move(tail_part);
        e.right = std::move(head_part);
    }
    e.interval = Interval{std::min(head.x, tail.x), std::max(head.x, tail.x)};
    return e;
}

Member Member::one_curve(Polyline curve) {
    require_simple(curve);
    const auto& pts = curve.points();
    if (pts.front().y != 0 && pts.back().y != 0) {
        throw FamilyError("1-curve " + curve.id() + " needs an endpoint on the baseline");
    }
    Member m;
    m.basepoints_ = baseline_crossings_along(curve);
    m.id_ = curve.id();
    m.shape_ = MemberShape::OneCurve;
    m.strands_.push_back(std::move(curve));
    return m;
}

Member Member::even(Polyline curve) {
    EvenCurve e = decompose_even_curve(curve);
    Member m;
    m.id_ = curve.id();
    m.shape_ = MemberShape::Even;
    m.basepoints_ = std::move(e.basepoints);
    m.head_is_left_ = e.head_is_left;
    m.strands_.push_back(std::move(curve));
    return m;
}

Member Member::double_curve(std::string id, Polyline left, Polyline right) {
    left.set_id(id + ".L");
    right.set_id(id + ".R");
    Member l = one_curve(std::move(left));
    Member r = one_curve(std::move(right));
    if (!(l.basepoints_.front().x < r.basepoints_.front().x)) {
        throw FamilyError("double-curve " + id + ": basepoint of L must lie left of the basepoint of R");
    }
    if (!polyline_crossings(l.strands_.front(), r.strands_.front()).empty()) {
        throw FamilyError("double-curve " + id + ": L and R intersect");
    }
    Member m;
    m.id_ = std::move(id);
    m.shape_ = MemberShape::Double;
    m.basepoints_ = {l.basepoints_.front(), r.basepoints_.front()};
    m.strands_ = {std::move(l.strands_.front()), std::move(r.strands_.front())};
    return m;
}

std::vector<Rational> Member::basepoint_xs() const {
    std::vector<Rational> xs;
    xs.reserve(basepoints_.size());
    for (const auto& b : basepoints_) xs.push_back(b.x);
    return xs;
}

const Rational& Member::left_basepoint() const {
    if (shape_ == MemberShape::Even && !head_is_left_) return basepoints_.back().x;
    return basepoints_.front().x;
}

const Rational& Member::right_basepoint() const {
    if (shape_ == MemberShape::Even && !head_is_left_) return basepoints_.front().x;
    return basepoints_.back().x;
}

Interval Member::interval() const { return Interval{left_basepoint(), right_basepoint()}; }

Rational Member::min_basepoint() const {
    Rational m = basepoints_.front().x;
    for (const auto& b : basepoints_) m = std::min(m, b.x);
    return m;
}

Rational Member::max_basepoint() const {
    Rational m = basepoints_.front().x;
    for (const auto& b : basepoints_) m = std::max(m, b.x);
    return m;
}

Part Member::part_at(std::size_t strand, const CurvePos& pos) const {
    switch (shape_) {
        case MemberShape::OneCurve: return Part::Whole;
        case MemberShape::Double: return strand == 0 ? Part::L : Part::R;
        case MemberShape::Even: break;
    }
    const Part head = head_is_left_ ? Part::L : Part::R;
    const Part tail = head_is_left_ ? Part::R : Part::L;
    if (pos <= basepoints_.front().pos) return head;
    if (basepoints_.back().pos <= pos) return tail;
    return Part::M;
}

Subcurve Member::part_points(Part p) const {
    switch (shape_) {
        case MemberShape::OneCurve:
            if (p != Part::Whole) throw std::invalid_argument("a 1-curve has no L/M/R parts");
            return as_subcurve(strands_.front());
        case MemberShape::Double:
            if (p == Part::L) return as_subcurve(strands_[0]);
            if (p == Part::R) return as_subcurve(strands_[1]);
            throw std::invalid_argument("a double-curve has only L and R parts");
        case MemberShape::Even: break;
    }
    EvenCurve e = decompose_even_curve(strands_.front());
    switch (p) {
        case Part::L: return e.left;
        case Part::R: return e.right;
        case Part::M: return e.middle;
        case Part::Whole: return as_subcurve(strands_.front());
    }
    return {};
}

std::vector<Incidence> incidences(const Member& a, const Member& b) {
    std::vector<Incidence> out;
    for (std::size_t i = 0; i < a.strands().size(); ++i) {
        for (std::size_t j = 0; j < b.strands().size(); ++j) {
            for (auto& c : polyline_crossings(a.strands()[i], b.strands()[j])) {
                out.push_back(Incidence{std::move(c.point), a.part_at(i, c.on_a), b.part_at(j, c.on_b)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Incidence& x, const Incidence& y) { return x.point < y.point; });
    return out;
}

bool parts_intersect(const Member& a, Part pa, const Member& b, Part pb) {
    if (a.id() == b.id()) return pa == pb;
    for (const auto& inc : incidences(a, b))
        if (inc.part_a == pa && inc.part_b == pb) return true;
    return false;
}

CurveFamily::CurveFamily(FamilyKind kind, std::vector<Member> members, std::int64_t scale, int t)
    : kind_(kind), t_(t), scale_(scale), members_(std::move(members)) {
    if (scale_ <= 0) throw FamilyError("family scale must be positive");
    if (kind_ == FamilyKind::TwoT && t_ < 1) throw FamilyError("2t-family needs t >= 1");
    if (kind_ == FamilyKind::LR2) t_ = 1;

    std::set<std::string> ids;
    for (const auto& m : members_) {
        if (!ids.insert(m.id()).second) throw FamilyError("duplicate member id " + m.id());
        bool ok = true;
        switch (kind_) {
            case FamilyKind::OneCurve: ok = m.shape() == MemberShape::OneCurve; break;
            case FamilyKind::Even:
            case FamilyKind::LR: ok = m.shape() == MemberShape::Even; break;
            case FamilyKind::TwoT:
                ok = m.shape() == MemberShape::Even && m.basepoint_count() == 2 * std::size_t(t_);
                break;
            case FamilyKind::LR2: ok = m.shape() == MemberShape::Even && m.basepoint_count() == 2; break;
            case FamilyKind::Double: ok = m.shape() == MemberShape::Double; break;
        }
        if (!ok) {
            throw KindMismatchError("member " + m.id() + " (" + to_string(m.shape()) + ", " +
                                    std::to_string(m.basepoint_count()) + " basepoints) does not fit kind " +
                                    to_string(kind_));
        }
    }

    std::vector<std::pair<Rational, std::size_t>> all;
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (const auto& b : members_[i].basepoints()) all.emplace_back(b.x, i);
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].first == all[i - 1].first) {
            throw DuplicateBasepointError("members " + members_[all[i - 1].second].id() + " and " +
                                          members_[all[i].second].id() + " share basepoint x=" +
                                          to_string(all[i].first));
        }
    }
}

std::optional<std::size_t> CurveFamily::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].id() == id) return i;
    return std::nullopt;
}

CurveFamily CurveFamily::subset(std::span<const std::size_t> indices) const {
    std::vector<Member> ms;
    ms.reserve(indices.size());
    for (auto i : indices) ms.push_back(members_.at(i));
    return CurveFamily(kind_, std::move(ms), scale_, t_);
}

CurveFamily CurveFamily::with_kind(FamilyKind kind, int t) const { return CurveFamily(kind, members_, scale_, t); }

std::vector<PairIncidences> family_incidences(const CurveFamily& family) {
    const std::size_t n = family.size();
    struct Box {
        Point lo, hi;
    };
    std::vector<Box> boxes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& strands = family[i].strands();
        auto [lo, hi] = strands.front().bounds();
        for (std::size_t s = 1; s < strands.size(); ++s) {
            auto [l2, h2] = strands[s].bounds();
            lo = Point{std::min(lo.x, l2.x), std::min(lo.y, l2.y)};
            hi = Point{std::max(hi.x, h2.x), std::max(hi.y, h2.y)};
        }
        boxes[i] = Box{lo, hi};
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].lo.x < boxes[b].lo.x; });

    std::vector<PairIncidences> out;
    for (std::size_t oi = 0; oi < n; ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < n && boxes[order[oj]].lo.x <= boxes[i].hi.x; ++oj) {
            const std::size_t j = order[oj];
            if (boxes[j].lo.y > boxes[i].hi.y || boxes[i].lo.y > boxes[j].hi.y) continue;
            const std::size_t a = std::min(i, j), b = std::max(i, j);
            auto pts = incidences(family[a], family[b]);
            if (!pts.empty()) out.push_back(PairIncidences{a, b, std::move(pts)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return out;
}

LrReport validate_lr(const CurveFamily& family) {
    for (const auto& m : family.members()) {
        if (m.shape() == MemberShape::OneCurve) {
            throw KindMismatchError("LR validation needs even-curves or double-curves; " + m.id() + " is a 1-curve");
        }
    }
    LrReport report;
    for (const auto& pair : family_incidences(family)) {
        ++report.intersecting_pairs;
        for (const auto& inc : pair.points) {
            ++report.incidences;
            const bool lr = (inc.part_a == Part::L && inc.part_b == Part::R) ||
                            (inc.part_a == Part::R && inc.part_b == Part::L);
            if (!lr) {
                report.violations.push_back(
                    LrViolation{family[pair.a].id(), family[pair.b].id(), inc.point, inc.part_a, inc.part_b});
            }
        }
    }
    return report;
}

std::string format_lr_report(const LrReport& report) {
    std::ostringstream os;
    for (const auto& v : report.violations) {
        os << "violation " << v.a << ' ' << v.b << ' ' << to_string(v.point) << ' ' << to_string(v.part_a) << '-'
           << to_string(v.part_b) << '\n';
    }
    os << (report.certified() ? "lr certified" : "lr violated") << " pairs=" << report.intersecting_pairs
       << " incidences=" << report.incidences << " violations=" << report.violations.size() << '\n';
    return os.str();
}

FamilyCertificate validate_family(const CurveFamily& family) {
    FamilyCertificate cert;
    cert.kind = family.kind();
    cert.t = family.t();
    cert.members = family.size();
    if (family.kind() == FamilyKind::LR || family.kind() == FamilyKind::LR2) {
        const LrReport report = validate_lr(family);
        if (!report.certified()) {
            const auto& v = report.violations.front();
            throw FamilyError("not an LR-family: " + v.a + " and " + v.b + " meet at " + to_string(v.point) +
                              " on parts " + to_string(v.part_a) + "/" + to_string(v.part_b));
        }
        cert.lr_verified = true;
        cert.incidences = report.incidences;
    }
    return cert;
}

CurveFamily subfamily_between(const CurveFamily& family, const Rational& x, const Rational& y) {
    const Rational lo = std::min(x, y), hi = std::max(x, y);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (lo < family[i].min_basepoint() && family[i].max_basepoint() < hi) keep.push_back(i);
    }
    return family.subset(keep);
}

CurveFamily subfamily_between(const CurveFamily& family, const Member& x, const Member& y) {
    if (x.basepoint_count() != 1 || y.basepoint_count() != 1) {
        throw std::invalid_argument("subfamily_between expects two 1-curves");
    }
    return subfamily_between(family, x.basepoints().front().x, y.basepoints().front().x);
}

CurveFamily subfamily_on_interval(const CurveFamily& family, const Interval& interval) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (interval.contains(family[i].min_basepoint()) && interval.contains(family[i].max_basepoint())) {
            keep.push_back(i);
        }
    }
    return family.subset(keep);
}

XiResult xi_of_family(const CurveFamily& family, SolverBudget budget) {
    const IntersectionGraph g = build_graph(family);
    XiResult result;
    result.per_member.resize(g.size(), 0);
    for (std::size_t c = 0; c < g.size(); ++c) {
        const auto nbrs = g.neighbors(c).to_vector();
        const int chi = nbrs.empty() ? 0 : chromatic_number(g.induced(nbrs), std::nullopt, budget).chi;
        result.per_member[c] = chi;
        if (!result.argmax || chi > result.xi) {
            result.xi = chi;
            result.argmax = c;
        }
    }
    return result;
}

ChainReport is_chain(const CurveFamily& family, const ChainCandidate& candidate) {
    ChainReport report;
    std::map<std::size_t, int> uses;
    for (const auto& [a, b] : candidate.pairs) {
        if (a >= family.size() || b >= family.size()) throw std::out_of_range("chain pair names a missing member");
        ++uses[a];
        ++uses[b];
    }
    for (const auto& [m, count] : uses)
        if (count > 1) report.repeated_members.push_back(m);

    auto fail = [&](int clause, std::size_t i, std::string detail) {
        report.is_chain = false;
        report.clause = clause;
        report.index = i + 1;
        report.detail = std::move(detail);
        return report;
    };

    const auto& pairs = candidate.pairs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Member& a = family[pairs[i].first];
        const Member& b = family[pairs[i].second];
        if (!parts_intersect(a, Part::R, b, Part::L)) {
            return fail(1, i, "R(" + a.id() + ") and L(" + b.id() + ") do not intersect");
        }
        if (i == 0) continue;
        const Member& pa = family[pairs[i - 1].first];
        const Member& pb = family[pairs[i - 1].second];
        const Rational lo = std::min(pa.right_basepoint(), pb.left_basepoint());
        const Rational hi = std::max(pa.right_basepoint(), pb.left_basepoint());
        auto inside = [&](const Rational& x) { return lo < x && x < hi; };
        if (!inside(a.right_basepoint()) || !inside(b.left_basepoint())) {
            return fail(2, i, "basepoints of R(" + a.id() + ") and L(" + b.id() + ") are not nested");
        }
        bool a_side = true, b_side = true;
        for (std::size_t j = 0; j < i; ++j) {
            a_side = a_side && parts_intersect(a, Part::L, family[pairs[j].first], Part::R);
            b_side = b_side && parts_intersect(b, Part::R, family[pairs[j].second], Part::L);
        }
        if (!a_side && !b_side) {
            return fail(3, i, "neither L(" + a.id() + ") nor R(" + b.id() + ") meets all earlier pairs");
        }
    }
    report.is_chain = true;
    return report;
}

IntersectionGraph build_graph(const CurveFamily& family) {
    std::vector<std::string> labels;
    labels.reserve(family.size());
    for (const auto& m : family.members()) labels.push_back(m.id());
    IntersectionGraph g(family.size(), std::move(labels));
    for (const auto& pair : family_incidences(family)) g.add_edge(pair.a, pair.b);
    return g;
}

}  // namespace curvechi
