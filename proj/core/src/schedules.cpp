#include "fishswarm/schedules.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace fishswarm {

namespace {

void check_range(double mw_min, double mw_max) {
    if (!(mw_min > 0.0) || !(mw_min <= mw_max)) {
        throw std::invalid_argument("MwSchedule: needs 0 < mw_min <= mw_max");
    }
}

void check_itr_max(int itr_max) {
    if (itr_max < 1) {
        throw std::invalid_argument("MwSchedule: itr_max must be positive");
    }
}

} // namespace

MwSchedule::MwSchedule(Kind kind, double mw, double mw_min, double mw_max, int itr_max)
    : kind_(kind), mw_(mw), mw_min_(mw_min), mw_max_(mw_max), itr_max_(itr_max) {}

MwSchedule MwSchedule::constant(double mw, int itr_max) {
    check_itr_max(itr_max);
    if (!(mw > 0.0)) {
        throw std::invalid_argument("MwSchedule: constant mw must be positive");
    }
    return MwSchedule(Kind::Constant, mw, mw, mw, itr_max);
}

MwSchedule MwSchedule::linear_decreasing(double mw_min, double mw_max, int itr_max) {
    check_itr_max(itr_max);
    check_range(mw_min, mw_max);
    return MwSchedule(Kind::LinearDecreasing, 0.0, mw_min, mw_max, itr_max);
}

MwSchedule MwSchedule::linear_increasing(double mw_min, double mw_max, int itr_max) {
    check_itr_max(itr_max);
    check_range(mw_min, mw_max);
    return MwSchedule(Kind::LinearIncreasing, 0.0, mw_min, mw_max, itr_max);
}

MwSchedule MwSchedule::random(double mw_min, double mw_max, int itr_max) {
    check_itr_max(itr_max);
    check_range(mw_min, mw_max);
    return MwSchedule(Kind::Random, 0.0, mw_min, mw_max, itr_max);
}

MwSchedule MwSchedule::parse(const std::string& spec, int itr_max) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ':')) {
        parts.push_back(token);
    }
    const auto as_double = [&spec](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("MwSchedule: bad number in spec '" + spec + "'");
        }
        if (used != s.size()) {
            throw std::invalid_argument("MwSchedule: bad number in spec '" + spec + "'");
        }
        return v;
    };
    if (parts.size() == 2 && parts[0] == "constant") {
        return constant(as_double(parts[1]), itr_max);
    }
    if (parts.size() == 3 && parts[0] == "lindec") {
        return linear_decreasing(as_double(parts[1]), as_double(parts[2]), itr_max);
    }
    if (parts.size() == 3 && parts[0] == "lininc") {
        return linear_increasing(as_double(parts[1]), as_double(parts[2]), itr_max);
    }
    if (parts.size() == 3 && parts[0] == "random") {
        return random(as_double(parts[1]), as_double(parts[2]), itr_max);
    }
    throw std::invalid_argument(
        "MwSchedule: cannot parse '" + spec +
        "'; expected constant:MW, lindec:MIN:MAX, lininc:MIN:MAX or random:MIN:MAX");
}

double MwSchedule::mw_at(int itr, RngStream& rng) const {
    if (itr < 0 || itr > itr_max_) {
        throw std::out_of_range("MwSchedule: iteration outside [0, itr_max]");
    }
    const double remaining = static_cast<double>(itr_max_ - itr) / itr_max_;
    switch (kind_) {
    case Kind::Constant:
        return mw_;
    case Kind::LinearDecreasing:
        return mw_min_ + remaining * (mw_max_ - mw_min_);
    case Kind::LinearIncreasing:
        return mw_max_ - remaining * (mw_max_ - mw_min_);
    case Kind::Random:
        return mw_min_ + rng.uniform01() * (mw_max_ - mw_min_);
    }
    throw std::logic_error("MwSchedule: unreachable");
}

std::string MwSchedule::spec_string() const {
    std::ostringstream out;
    out.precision(17);
    switch (kind_) {
    case Kind::Constant:
        out << "constant:" << mw_;
        break;
    case Kind::LinearDecreasing:
        out << "lindec:" << mw_min_ << ":" << mw_max_;
        break;
    case Kind::LinearIncreasing:
        out << "lininc:" << mw_min_ << ":" << mw_max_;
        break;
    case Kind::Random:
        out << "random:" << mw_min_ << ":" << mw_max_;
        break;
    }
    return out.str();
}

VisualStep apply_update(double visual, double step, double mw) {
    if (!(visual > 0.0) || !(step > 0.0) || !(mw > 0.0)) {
        throw std::invalid_argument("apply_update: visual, step and mw must be positive");
    }
    VisualStep next{mw * visual, mw * step};
    // Keep the strict-positivity contract when the product underflows.
    const double floor = std::numeric_limits<double>::denorm_min();
    if (next.visual <= 0.0) next.visual = floor;
    if (next.step <= 0.0) next.step = floor;
    return next;
}

} // namespace fishswarm
