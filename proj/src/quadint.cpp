#include "vdgap/quadint.hpp"

#include <stdexcept>

#include "vdgap/numtheory.hpp"

namespace vdgap {

QuadRing QuadRing::create(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("QuadRing: d must be >= 1");
    QuadRing ring;
    ring.d = d;
    ring.squarefree = is_squarefree(d);  // also enforces d <= 10^12
    return ring;
}

QuadInt::QuadInt(BigInt a, BigInt b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1) throw std::invalid_argument("QuadInt: d must be >= 1");
}

void QuadInt::require_same_ring(const QuadInt& x, const QuadInt& y) {
    if (x.d_ != y.d_) {
        throw std::invalid_argument("QuadInt: elements of Z[sqrt(-" + std::to_string(x.d_) +
                                    ")] and Z[sqrt(-" + std::to_string(y.d_) + ")] do not mix");
    }
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    QuadInt::require_same_ring(x, y);
    return QuadInt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    QuadInt::require_same_ring(x, y);
    return QuadInt(x.a_ - y.a_, x.b_ - y.b_, x.d_);
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    QuadInt::require_same_ring(x, y);
    // (a1 + b1 w)(a2 + b2 w) with w^2 = -d.
    BigInt d(static_cast<long long>(x.d_));
    return QuadInt(x.a_ * y.a_ - d * (x.b_ * y.b_), x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

bool operator==(const QuadInt& x, const QuadInt& y) {
    QuadInt::require_same_ring(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

BigInt quad_norm(const QuadInt& x) {
    return x.re() * x.re() + BigInt(static_cast<long long>(x.d())) * (x.im() * x.im());
}

QuadInt divide_exact(const QuadInt& x, const QuadInt& y) {
    if (y.is_zero()) throw std::invalid_argument("QuadInt: division by zero");
    // x / y = x * conj(y) / N(y), both coordinates must divide exactly.
    QuadInt t = x * y.conj();
    BigInt n = quad_norm(y);
    return QuadInt(divide_exact(t.re(), n), divide_exact(t.im(), n), x.d());
}

std::string QuadInt::to_string() const {
    std::string radical = "sqrt(-" + std::to_string(d_) + ")";
    if (b_.is_zero()) return a_.to_string();
    std::string im_part;
    if (b_ == BigInt(1)) {
        im_part = radical;
    } else if (b_ == BigInt(-1)) {
        im_part = "-" + radical;
    } else {
        im_part = b_.to_string() + "*" + radical;
    }
    if (a_.is_zero()) return im_part;
    if (im_part[0] == '-') return a_.to_string() + im_part;
    return a_.to_string() + "+" + im_part;
}

}  // namespace vdgap
