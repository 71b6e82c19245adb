#include "ovs/relations.hpp"

namespace ovs {

bool strongly_related(const StrongRelation& rel, const Vec& x, const Vec& y) {
    require_same_dim(rel.base, x);
    require_same_dim(rel.base, y);
    return is_orthogonal(x - y, rel.base, rel.tol);
}

Verdict check_equivalence(const StrongRelation& rel, const Vec& x, const Vec& y,
                          const Vec& z) {
    Verdict v;
    v.add("reflexive", strongly_related(rel, x, x));
    bool xy = strongly_related(rel, x, y);
    bool yx = strongly_related(rel, y, x);
    v.add("symmetric", xy == yx);
    bool yz = strongly_related(rel, y, z);
    bool xz = strongly_related(rel, x, z);
    v.add("transitive", !(xy && yz) || xz);
    return v;
}

Verdict check_scalar_invariance(const StrongRelation& rel, const Vec& x, const Vec& y,
                                double alpha, double beta) {
    Verdict v;
    bool hyp = strongly_related(rel, x, y);
    v.add("hypothesis", hyp);
    StrongRelation scaled{beta * rel.base, rel.tol};
    v.add("alpha_scaling", !hyp || strongly_related(rel, alpha * x, alpha * y));
    v.add("base_scaling", !hyp || strongly_related(scaled, x, y));
    v.add("joint_scaling", !hyp || strongly_related(scaled, alpha * x, alpha * y));
    return v;
}

Verdict check_additivity(const StrongRelation& rel, const Vec& x1, const Vec& y1,
                         const Vec& x2, const Vec& y2) {
    Verdict v;
    bool hyp = strongly_related(rel, x1, y1) && strongly_related(rel, x2, y2);
    v.add("hypothesis", hyp);
    v.add("sum", !hyp || strongly_related(rel, x1 + x2, y1 + y2));
    v.add("difference", !hyp || strongly_related(rel, x1 - x2, y1 - y2));
    return v;
}

Verdict check_characterizations(const StrongRelation& rel, const Vec& x, const Vec& y,
                                const Vec& z) {
    Verdict v;
    Vec zero = Vec::zeros(x.dim());
    bool c1 = strongly_related(rel, x, y);
    bool c2 = strongly_related(rel, pos(x), pos(y)) && strongly_related(rel, neg(x), neg(y));
    bool c3 = strongly_related(rel, join(x, y), meet(x, y));
    bool c4 = strongly_related(rel, join(x, z), join(y, z)) &&
              strongly_related(rel, meet(x, z), meet(y, z)) &&
              strongly_related(rel, join(x, zero), join(y, zero)) &&
              strongly_related(rel, meet(x, zero), meet(y, zero));
    v.add("parts_iff", c1 == c2);
    v.add("join_meet_iff", c1 == c3);
    v.add("sampled_z_iff", c1 == c4);
    v.add("all_equal", c1 == c2 && c2 == c3 && c3 == c4);
    return v;
}

Verdict check_abs_properties(const StrongRelation& rel, const Vec& x, const Vec& y) {
    Verdict v;
    Vec zero = Vec::zeros(x.dim());
    auto rel0 = [&](const Vec& a) { return strongly_related(rel, a, zero); };

    bool xy = strongly_related(rel, x, y);
    v.add("abs_preserved", !xy || strongly_related(rel, abs(x), abs(y)));

    bool absrel = strongly_related(rel, abs(x), abs(y));
    v.add("meet_vanishes", !absrel || rel0(meet(abs(x + y), abs(x - y))));

    bool absneg = strongly_related(rel, abs(x), -abs(y));
    v.add("join_vanishes", !absneg || (rel0(join(abs(x + y), abs(x - y))) &&
                                       strongly_related(rel, x, y) &&
                                       strongly_related(rel, x, -y)));

    bool jm0 = rel0(join(x, y)) && rel0(meet(x, y));
    v.add("join_meet_zero_implies_related", !jm0 || xy);

    bool both = xy && strongly_related(rel, x, -y);
    v.add("both_signs_collapse",
          !both || (rel0(x) && rel0(join(x, y)) && rel0(meet(x, y)) &&
                    rel0(join(abs(x), abs(y))) && rel0(meet(abs(x), abs(y)))));
    return v;
}

bool related_to_zero_self(const Vec& x, const Tol& tol) {
    StrongRelation rel{x, tol};
    bool related = strongly_related(rel, x, Vec::zeros(x.dim()));
    bool is_zero = tol.vec_eq(x, Vec::zeros(x.dim()));
    if (related != is_zero)
        throw std::logic_error("related_to_zero_self: verdict disagrees with x = 0");
    return related;
}

}  // namespace ovs
