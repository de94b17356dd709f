#ifndef RPQI_POINTS_HPP
#define RPQI_POINTS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace rpqi {

/// A point in objective space (minimization convention).
using Point = std::vector<double>;

/// An ordered multiset of objective points sharing one dimensionality.
///
/// Order is preserved from input; indices are stable identifiers. Exact
/// duplicates are allowed.
class PointSet {
 public:
    PointSet() = default;

    /// Validates uniform dimensionality (m >= 2) and finite coordinates.
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// Dimensionality of the members, 0 for an empty set.
    std::size_t dim() const { return points_.empty() ? 0 : points_.front().size(); }

    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    /// Appends a point, enforcing the shared dimensionality.
    void push_back(Point p);

    /// Translates every coordinate of every member by the same offset.
    PointSet shifted(double offset) const;

 private:
    std::vector<Point> points_;
};

/// True iff a is no worse than b in every objective and strictly better in
/// at least one.
bool dominates(const Point& a, const Point& b);

/// True iff a is no worse than b in every objective.
bool weakly_dominates(const Point& a, const Point& b);

/// Points of P not dominated by any other member. Input order is preserved
/// and duplicates of a nondominated value are all kept.
PointSet nondominated_filter(const PointSet& P);

/// Removes exact-equality duplicates, keeping the first occurrence.
PointSet dedupe(const PointSet& P);

double dist_euclid(const Point& a, const Point& b);
double dist_manhattan(const Point& a, const Point& b);
double dist_chebyshev(const Point& a, const Point& b);

/// Concatenates K sets in order into one multiset.
PointSet concat(std::span<const PointSet> sets);

namespace detail {
void require_same_dim(const Point& a, const Point& b);
void require_finite(const Point& p);
}  // namespace detail

}  // namespace rpqi

#endif  // RPQI_POINTS_HPP
