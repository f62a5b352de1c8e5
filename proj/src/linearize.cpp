#include "multizero/linearize.hpp"

namespace multizero {

ExpComparison compare_exp(Sign a, std::size_t x, Sign b, std::size_t y) {
    ExpComparison cmp;
    cmp.x = x;
    cmp.y = y;
    if (a == 0 && b == 0) {
        cmp.constant = 0;
    } else if (a == 0) {
        cmp.constant = static_cast<Sign>(-b);
    } else if (b == 0) {
        cmp.constant = a;
    } else if (a == -b) {
        cmp.constant = a;
    } else {
        cmp.factor = a;
    }
    return cmp;
}

Sign ExpComparison::evaluate(const std::vector<Rat>& point) const {
    if (constant) {
        return *constant;
    }
    return static_cast<Sign>(factor * sign_of(Rat(point.at(x) - point.at(y))));
}

bool require_sign(ConstraintSystem& sys, const ExpComparison& cmp, SignSet allowed, const std::string& label) {
    if (cmp.constant) {
        return allowed.contains(*cmp.constant);
    }
    // Allowed signs of x - y.
    SignSet diff;
    for (Sign v : {Sign(-1), Sign(0), Sign(1)}) {
        if (allowed.contains(v)) {
            diff.bits |= SignSet::of(static_cast<Sign>(v * cmp.factor)).bits;
        }
    }
    const bool neg = diff.contains(-1);
    const bool zero = diff.contains(0);
    const bool pos = diff.contains(1);
    if (!neg && !zero && !pos) {
        return false;
    }
    if (neg && zero && pos) {
        return true;
    }
    if (neg && pos) {
        throw InternalError("sign set {-1, 1} is not convex");
    }
    if (zero && !neg && !pos) {
        sys.add_difference(cmp.x, cmp.y, Relation::Equal, label);
    } else if (pos) {
        sys.add_difference(cmp.x, cmp.y, zero ? Relation::GreaterEqual : Relation::Greater, label);
    } else {
        sys.add_difference(cmp.y, cmp.x, zero ? Relation::GreaterEqual : Relation::Greater, label);
    }
    return true;
}

}  // namespace multizero
