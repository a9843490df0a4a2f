#pragma once

// Families of baseline-anchored curves: even-curve anatomy, family kinds and
// their validation, interval/betweenness subfamilies, and chain checking.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvechi/geometry.hpp"
#include "curvechi/graph.hpp"

namespace curvechi {

// L and R are the end 1-curves of a member (L has the left basepoint), M is
// everything between them. A standalone 1-curve is Whole.
enum class Part { L, M, R, Whole };
const char* to_string(Part p);

enum class MemberShape { OneCurve, Even, Double };
const char* to_string(MemberShape s);

struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool disjoint(const Interval& other) const { return hi < other.lo || other.hi < lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

using Subcurve = std::vector<ExactPoint>;

struct EvenCurve {
    Polyline curve;
    std::vector<Basepoint> basepoints;  // in order along the curve
    bool head_is_left = true;           // the piece before the first basepoint is L(c)
    Subcurve left;
    Subcurve middle;
    Subcurve right;
    Interval interval;
};

// Splits an even-curve into L(c), M(c), R(c) and I(c).
EvenCurve decompose_even_curve(const Polyline& c);

class Member {
public:
    static Member one_curve(Polyline curve);
    static Member even(Polyline curve);
    static Member double_curve(std::string id, Polyline left, Polyline right);

    const std::string& id() const noexcept { return id_; }
    MemberShape shape() const noexcept { return shape_; }
    const std::vector<Polyline>& strands() const noexcept { return strands_; }
    // Along the curve; for a double-curve the L basepoint then the R basepoint.
    const std::vector<Basepoint>& basepoints() const noexcept { return basepoints_; }
    std::vector<Rational> basepoint_xs() const;
    std::size_t basepoint_count() const noexcept { return basepoints_.size(); }
    bool head_is_left() const noexcept { return head_is_left_; }

    // Basepoint of L (resp. R); a 1-curve answers its single basepoint.
    const Rational& left_basepoint() const;
    const Rational& right_basepoint() const;
    Interval interval() const;
    Rational min_basepoint() const;
    Rational max_basepoint() const;

    Part part_at(std::size_t strand, const CurvePos& pos) const;

    // Vertices of one part; parts of even-curves are materialized exactly.
    Subcurve part_points(Part p) const;

    const std::string& level() const noexcept { return level_; }
    void set_level(std::string level) { level_ = std::move(level); }

private:
    Member() = default;

    std::string id_;
    MemberShape shape_ = MemberShape::OneCurve;
    std::vector<Polyline> strands_;
    std::vector<Basepoint> basepoints_;
    bool head_is_left_ = true;
    std::string level_;
};

struct Incidence {
    ExactPoint point;
    Part part_a = Part::Whole;
    Part part_b = Part::Whole;
};

// Every common point of two members with the part of each containing it.
std::vector<Incidence> incidences(const Member& a, const Member& b);
bool parts_intersect(const Member& a, Part pa, const Member& b, Part pb);

enum class FamilyKind { OneCurve, Even, TwoT, LR, LR2, Double };
const char* to_string(FamilyKind k);
FamilyKind family_kind_from_string(const std::string& s);

class CurveFamily {
public:
    CurveFamily() = default;
    // Checks member shapes against the kind and that all basepoints are
    // pairwise distinct. LR-type kinds are certified by validate_family.
    CurveFamily(FamilyKind kind, std::vector<Member> members, std::int64_t scale = 1, int t = 0);

    FamilyKind kind() const noexcept { return kind_; }
    int t() const noexcept { return t_; }
    std::int64_t scale() const noexcept { return scale_; }
    const std::vector<Member>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    const Member& operator[](std::size_t i) const { return members_[i]; }
    std::optional<std::size_t> index_of(const std::string& id) const;

    CurveFamily subset(std::span<const std::size_t> indices) const;
    CurveFamily with_kind(FamilyKind kind, int t = 0) const;

private:
    FamilyKind kind_ = FamilyKind::Even;
    int t_ = 0;
    std::int64_t scale_ = 1;
    std::vector<Member> members_;
};

struct PairIncidences {
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<Incidence> points;
};

// Intersecting pairs (a < b) of a family with their incidences.
std::vector<PairIncidences> family_incidences(const CurveFamily& family);

struct LrViolation {
    std::string a;
    std::string b;
    ExactPoint point;
    Part part_a = Part::Whole;
    Part part_b = Part::Whole;
};

struct LrReport {
    std::vector<LrViolation> violations;
    std::size_t intersecting_pairs = 0;
    std::size_t incidences = 0;
    bool certified() const noexcept { return violations.empty(); }
};

// LR-family check: every common point of two members must lie on L of one
// and R of the other.
LrReport validate_lr(const CurveFamily& family);
std::string format_lr_report(const LrReport& report);

struct FamilyCertificate {
    FamilyKind kind = FamilyKind::Even;
    int t = 0;
    std::size_t members = 0;
    bool lr_verified = false;
    std::size_t incidences = 0;
};

// Throws FamilyError (or the geometry error) when the family does not match
// its declared kind.
FamilyCertificate validate_family(const CurveFamily& family);

// C(x, y): members strictly between the basepoints of two 1-curves.
CurveFamily subfamily_between(const CurveFamily& family, const Member& x, const Member& y);
CurveFamily subfamily_between(const CurveFamily& family, const Rational& x, const Rational& y);
// C(I): members with every basepoint in the closed interval.
CurveFamily subfamily_on_interval(const CurveFamily& family, const Interval& interval);

struct XiResult {
    int xi = 0;
    std::optional<std::size_t> argmax;
    std::vector<int> per_member;  // chromatic number of each member's neighbourhood
};

// max over c of χ(members of F \ {c} meeting c).
XiResult xi_of_family(const CurveFamily& family, SolverBudget budget = {});

struct ChainCandidate {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (a_i, b_i) member indices
};

struct ChainReport {
    bool is_chain = false;
    int clause = 0;          // first violated clause (1, 2 or 3), 0 when valid
    std::size_t index = 0;   // 1-based i of the violation
    std::vector<std::size_t> repeated_members;
    std::string detail;
};

ChainReport is_chain(const CurveFamily& family, const ChainCandidate& candidate);

}  // namespace curvechi
