#pragma once

namespace pqtrig {

/// Order of a Hölder (power) mean. Zero denotes the geometric mean.
class HolderOrder {
public:
    /// Throws DomainError for a non-finite order.
    explicit HolderOrder(double order);

    double value() const noexcept { return order_; }

private:
    double order_;
};

/// ((a^r + b^r) / 2)^(1/r) for r != 0 and sqrt(ab) for r = 0, with
/// |r| < 1e-12 treated as zero. Symmetric in (a, b) and always inside
/// [min(a, b), max(a, b)]. Throws DomainError unless a, b > 0.
double holder_mean(HolderOrder order, double a, double b);

}  // namespace pqtrig
