#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace agstab {

// Non-finite value produced by an optimizer step; carries the offending
// point and the step index at which it appeared.
class numeric_error : public std::runtime_error {
public:
    numeric_error(std::string what, long long step, std::vector<double> point)
        : std::runtime_error(std::move(what)), step_(step), point_(std::move(point)) {}

    long long step() const noexcept { return step_; }
    const std::vector<double>& point() const noexcept { return point_; }

private:
    long long step_;
    std::vector<double> point_;
};

// A structural invariant of the inductive construction broke down
// (overlapping intervals, non-monotone placement, runaway phase count,
// divergence signal below the floating-point guard).
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A verifier assertion tripped: carries observed vs required values.
class check_failure : public std::runtime_error {
public:
    check_failure(std::string name, double observed, double required, std::string detail = "")
        : std::runtime_error(name + ": observed " + std::to_string(observed) +
                             ", required " + std::to_string(required) +
                             (detail.empty() ? "" : " (" + detail + ")")),
          name_(std::move(name)), observed_(observed), required_(required),
          detail_(std::move(detail)) {}

    const std::string& name() const noexcept { return name_; }
    double observed() const noexcept { return observed_; }
    double required() const noexcept { return required_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string name_;
    double observed_;
    double required_;
    std::string detail_;
};

}  // namespace agstab
