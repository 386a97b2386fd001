#include "vdgap/report.hpp"

namespace vdgap {

Conclusion conclude_ge(const ExactPower& lhs, const ExactPower& rhs) {
    Conclusion c;
    c.lhs = lhs.to_string();
    c.rhs = rhs.to_string();
    c.relation = ">=";
    c.ordering = exact_power_compare(lhs, rhs);
    c.holds = *c.ordering != Ordering::Less;
    return c;
}

}  // namespace vdgap
