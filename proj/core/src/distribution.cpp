#include "credal/distribution.hpp"

#include "credal/errors.hpp"

#include <stdexcept>

namespace credal {

void check_distribution(const std::vector<Rational>& q, const char* what) {
    Rational sum = 0;
    for (const auto& v : q) {
        if (v < 0) throw std::invalid_argument(std::string(what) + ": negative entry");
        sum += v;
    }
    if (sum != 1) {
        throw std::invalid_argument(std::string(what) + ": entries sum to " +
                                    to_fraction_string(sum) + ", expected 1");
    }
}

JointDistribution::JointDistribution(size_t nx, size_t ny, std::vector<Rational> entries)
    : nx_(nx), ny_(ny), p_(std::move(entries)) {
    if (nx_ == 0 || ny_ == 0 || p_.size() != nx_ * ny_) {
        throw DimensionMismatchError("joint distribution table has wrong shape");
    }
    check_distribution(p_, "joint distribution");
}

std::vector<Rational> JointDistribution::marginal_x() const {
    std::vector<Rational> m(nx_, Rational(0));
    for (size_t x = 0; x < nx_; ++x) {
        for (size_t y = 0; y < ny_; ++y) m[x] += at(x, y);
    }
    return m;
}

std::vector<Rational> JointDistribution::marginal_y() const {
    std::vector<Rational> m(ny_, Rational(0));
    for (size_t x = 0; x < nx_; ++x) {
        for (size_t y = 0; y < ny_; ++y) m[y] += at(x, y);
    }
    return m;
}

Rational JointDistribution::event_mass(const EventSet& e) const {
    Rational mass = 0;
    for (size_t x : e.xs) {
        for (size_t y = 0; y < ny_; ++y) mass += at(x, y);
    }
    return mass;
}

std::optional<JointDistribution> JointDistribution::condition(const EventSet& e) const {
    const Rational mass = event_mass(e);
    if (mass == 0) return std::nullopt;
    std::vector<Rational> q(nx_ * ny_, Rational(0));
    for (size_t x : e.xs) {
        for (size_t y = 0; y < ny_; ++y) q[x * ny_ + y] = at(x, y) / mass;
    }
    return JointDistribution(nx_, ny_, std::move(q));
}

std::optional<std::vector<Rational>> JointDistribution::conditional_y_given_x(size_t x) const {
    Rational mass = 0;
    for (size_t y = 0; y < ny_; ++y) mass += at(x, y);
    if (mass == 0) return std::nullopt;
    std::vector<Rational> q(ny_);
    for (size_t y = 0; y < ny_; ++y) q[y] = at(x, y) / mass;
    return q;
}

bool JointDistribution::is_product() const {
    const auto mx = marginal_x();
    const auto my = marginal_y();
    for (size_t x = 0; x < nx_; ++x) {
        for (size_t y = 0; y < ny_; ++y) {
            if (at(x, y) != mx[x] * my[y]) return false;
        }
    }
    return true;
}

bool JointDistribution::operator==(const JointDistribution& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && p_ == o.p_;
}

bool JointDistribution::operator<(const JointDistribution& o) const {
    return p_ < o.p_;
}

JointDistribution JointDistribution::point_mass(size_t nx, size_t ny, size_t x, size_t y) {
    std::vector<Rational> p(nx * ny, Rational(0));
    p[x * ny + y] = 1;
    return JointDistribution(nx, ny, std::move(p));
}

JointDistribution JointDistribution::uniform(size_t nx, size_t ny) {
    std::vector<Rational> p(nx * ny, Rational(1) / Rational(static_cast<long>(nx * ny)));
    return JointDistribution(nx, ny, std::move(p));
}

JointDistribution JointDistribution::product(const std::vector<Rational>& wx,
                                             const std::vector<Rational>& qy) {
    check_distribution(wx, "X marginal");
    check_distribution(qy, "Y marginal");
    std::vector<Rational> p;
    p.reserve(wx.size() * qy.size());
    for (const auto& w : wx) {
        for (const auto& q : qy) p.push_back(w * q);
    }
    return JointDistribution(wx.size(), qy.size(), std::move(p));
}

} // namespace credal
