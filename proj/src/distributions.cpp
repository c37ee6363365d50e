#include "evtail/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "evtail/errors.hpp"

namespace evtail {

namespace {

using Family = DistributionSpec::Family;
using Modifier = DistributionSpec::Modifier;

double draw_laplace(Rng& rng) {
    const double u = rng.uniform();
    return u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
}

// Bailey's polar method; exact for any degrees of freedom.
double draw_student_t(double nu, Rng& rng) {
    const double u = rng.uniform();
    const double v = rng.uniform();
    return std::sqrt(nu * (std::pow(u, -2.0 / nu) - 1.0)) *
           std::cos(2.0 * std::numbers::pi * v);
}

// Pareto parameterized by its tail index: survival x^{-1/xi} on x >= 1.
double draw_pareto(double xi, Rng& rng) {
    return std::pow(rng.uniform(), -xi);
}

double draw_chi_square(double df, Rng& rng) {
    auto n = static_cast<int>(df);
    double x = 0.0;
    for (int i = 0; i + 1 < n; i += 2) x += 2.0 * rng.exponential();
    if (n % 2 == 1) {
        const double z = rng.normal();
        x += z * z;
    }
    return x;
}

double draw_base(const DistributionSpec& spec, Rng& rng) {
    switch (spec.family) {
        case Family::normal:
            return rng.normal();
        case Family::laplace:
            return draw_laplace(rng);
        case Family::student_t:
            return draw_student_t(spec.param1, rng);
        case Family::pareto:
            return draw_pareto(spec.param1, rng);
        case Family::fisher_f: {
            const double x1 = draw_chi_square(spec.param1, rng) / spec.param1;
            const double x2 = draw_chi_square(spec.param2, rng) / spec.param2;
            return x1 / x2;
        }
    }
    throw std::logic_error("unreachable");
}

bool symmetric_family(Family f) {
    return f == Family::normal || f == Family::laplace || f == Family::student_t;
}

}  // namespace

void DistributionSpec::validate() const {
    switch (family) {
        case Family::student_t:
            if (!(param1 > 0.0)) throw DataError("t distribution needs positive df");
            break;
        case Family::pareto:
            if (!(param1 > 0.0 && param1 < 1.0)) {
                throw DataError("Pareto tail index must lie in (0,1)");
            }
            break;
        case Family::fisher_f:
            if (!(param1 >= 1.0 && param2 >= 1.0)) {
                throw DataError("F distribution needs positive integer dfs");
            }
            break;
        default:
            break;
    }
    if (modifier == Modifier::half && !symmetric_family(family)) {
        throw DataError("half modifier requires a symmetric base family");
    }
    if (modifier == Modifier::sign_symmetrized && symmetric_family(family)) {
        throw DataError("sign symmetrization applies to positive base families");
    }
}

double draw(const DistributionSpec& spec, Rng& rng) {
    const double x = draw_base(spec, rng);
    switch (spec.modifier) {
        case Modifier::none:
            return x;
        case Modifier::half:
            return std::abs(x);
        case Modifier::sign_symmetrized:
            return rng.next_u64() & 1 ? x : -x;
    }
    throw std::logic_error("unreachable");
}

std::vector<double> sample_distribution(const DistributionSpec& spec, std::int64_t n,
                                        Rng& rng) {
    spec.validate();
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto& v : out) v = draw(spec, rng);
    return out;
}

DistributionSpec DistributionSpec::parse(const std::string& text) {
    DistributionSpec spec;
    std::string body = text;
    if (body.rfind("half_", 0) == 0) {
        spec.modifier = Modifier::half;
        body = body.substr(5);
    } else if (body.rfind("sign_", 0) == 0) {
        spec.modifier = Modifier::sign_symmetrized;
        body = body.substr(5);
    }
    const auto paren = body.find('(');
    std::string name = paren == std::string::npos ? body : body.substr(0, paren);
    std::vector<double> args;
    if (paren != std::string::npos) {
        if (body.back() != ')') throw DataError("malformed distribution: " + text);
        std::string inner = body.substr(paren + 1, body.size() - paren - 2);
        std::size_t pos = 0;
        while (pos < inner.size()) {
            const auto comma = inner.find(',', pos);
            const auto piece = inner.substr(pos, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - pos);
            try {
                args.push_back(std::stod(piece));
            } catch (const std::exception&) {
                throw DataError("malformed distribution parameter in: " + text);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (name == "normal") {
        spec.family = Family::normal;
    } else if (name == "laplace") {
        spec.family = Family::laplace;
    } else if (name == "t" || name == "student_t") {
        spec.family = Family::student_t;
        if (args.size() != 1) throw DataError("t distribution needs one df: " + text);
        spec.param1 = args[0];
    } else if (name == "pareto") {
        spec.family = Family::pareto;
        if (args.size() != 1) throw DataError("pareto needs one tail index: " + text);
        spec.param1 = args[0];
    } else if (name == "f" || name == "fisher_f") {
        spec.family = Family::fisher_f;
        if (args.size() != 2) throw DataError("F distribution needs two dfs: " + text);
        spec.param1 = args[0];
        spec.param2 = args[1];
    } else {
        throw DataError("unknown distribution family: " + text);
    }
    spec.validate();
    return spec;
}

std::string DistributionSpec::to_string() const {
    std::string prefix;
    if (modifier == Modifier::half) prefix = "half_";
    if (modifier == Modifier::sign_symmetrized) prefix = "sign_";
    auto fmt = [](double v) {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    switch (family) {
        case Family::normal:
            return prefix + "normal";
        case Family::laplace:
            return prefix + "laplace";
        case Family::student_t:
            return prefix + "t(" + fmt(param1) + ")";
        case Family::pareto:
            return prefix + "pareto(" + fmt(param1) + ")";
        case Family::fisher_f:
            return prefix + "f(" + fmt(param1) + "," + fmt(param2) + ")";
    }
    return prefix;
}

}  // namespace evtail
