#include "scext/extension.hpp"

#include <stdexcept>

namespace scext {

std::string to_string(ParityClass p) {
    switch (p) {
        case ParityClass::IntegerGradedVOA: return "IntegerGradedVOA";
        case ParityClass::HalfIntegerGradedVOA_WrongStatistics:
            return "HalfIntegerGradedVOA_WrongStatistics";
        case ParityClass::VOSA: return "VOSA";
        case ParityClass::IntegerGradedSVOA_WrongStatistics:
            return "IntegerGradedSVOA_WrongStatistics";
    }
    return "?";
}

ParityClass parity_from_string(const std::string& s) {
    for (auto p : {ParityClass::IntegerGradedVOA, ParityClass::HalfIntegerGradedVOA_WrongStatistics,
                   ParityClass::VOSA, ParityClass::IntegerGradedSVOA_WrongStatistics}) {
        if (to_string(p) == s) return p;
    }
    throw InputError("unknown parity class '" + s + "'");
}

bool is_voa(ParityClass p) {
    return p == ParityClass::IntegerGradedVOA ||
           p == ParityClass::HalfIntegerGradedVOA_WrongStatistics;
}

ParityClass classify_extension(int theta_sign, int c_sign) {
    if ((theta_sign != 1 && theta_sign != -1) || (c_sign != 1 && c_sign != -1)) {
        throw std::domain_error("classify_extension expects signs in {+1, -1}");
    }
    if (c_sign == 1) {
        return theta_sign == 1 ? ParityClass::IntegerGradedVOA
                               : ParityClass::HalfIntegerGradedVOA_WrongStatistics;
    }
    return theta_sign == 1 ? ParityClass::IntegerGradedSVOA_WrongStatistics : ParityClass::VOSA;
}

std::string to_string(BraidingRoute r) {
    switch (r) {
        case BraidingRoute::UserSupplied: return "user-supplied";
        case BraidingRoute::SpinStatistics: return "spin-statistics";
        case BraidingRoute::OpeOrder: return "ope-order";
        case BraidingRoute::Undetermined: return "undetermined";
    }
    return "?";
}

SignPatternResult twist_sign_pattern(const std::vector<Rational>& weights, bool cyclic) {
    if (weights.empty() || !weights.front().is_zero()) {
        throw InputError("twist sign pattern: the weight of J^0 must be 0");
    }
    SignPatternResult r;
    const std::size_t n = weights.size();
    if (cyclic) {
        if (n == 1) {
            r.notes.push_back("order 1: the sign condition is vacuous");
        } else if (n == 2) {
            r.notes.push_back("order 2: J^{k+2} = J^k, the sign condition is vacuous");
        } else if (n % 2 == 1) {
            r.notes.push_back("odd order " + std::to_string(n) +
                              ": wrap-around forces one twist sign on every sector");
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!weights[k].is_half_integer()) {
            r.ok = false;
            r.offending = k;
            r.reason = "theta of J^" + std::to_string(k) + " is not +1 or -1 (h = " +
                       weights[k].to_string() + ")";
            return r;
        }
    }
    auto sign = [&](std::size_t k) { return weights[k].is_integer() ? 1 : -1; };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t next = k + 2;
        if (next >= n) {
            if (!cyclic) break;
            next %= n;
        }
        if (sign(next) != sign(k)) {
            r.ok = false;
            r.offending = k;
            r.reason = "theta of J^" + std::to_string(k) + " and of J^" + std::to_string(k + 2) +
                       " have different signs";
            return r;
        }
    }
    return r;
}

Phase braiding_from_spin_statistics(const Rational& h_J, const Phase& qdim_J) {
    return phase_from_weight(h_J) / qdim_J;
}

OpeRoute qdim_from_ope_order(const Rational& d, std::int64_t leading_order) {
    const Rational half_n = Rational(leading_order, 2);
    return {Phase(half_n - Rational(2) * d), Phase(half_n - d)};
}

bool balancing_check(const Rational& h_J, const Phase& c) {
    return (c.pow(2) * phase_from_weight(Rational(2) * h_J)).is_identity();
}

ExtensionReport build_extension(const FusionModel& m, const std::string& current_name,
                                std::optional<std::int64_t> bound) {
    const SimpleCurrent& J = m.current(current_name);
    ExtensionReport rep;
    rep.current = J.name;
    rep.grading_group = J.finite() ? "Z_" + std::to_string(*J.order) : "Z";

    Orbit sectors = orbit(m, J, m.vacuum, bound);
    rep.sectors_truncated = sectors.truncated;
    if (sectors.fixed_point) {
        rep.violations.push_back("the vacuum orbit closes before the order of the current");
    }
    std::vector<Rational> weights;
    for (const auto& s : sectors.elements) weights.push_back(m.weight(s));
    // J^k lies in 2G exactly for even k, or for every k when N is odd.
    const bool odd_order = J.finite() && *J.order % 2 == 1;
    for (std::size_t k = 0; k < sectors.elements.size(); ++k) {
        rep.sectors.push_back({sectors.elements[k], weights[k], 0});
        if (odd_order || k % 2 == 0) rep.even_part.push_back(sectors.elements[k]);
    }

    SignPatternResult pattern = twist_sign_pattern(weights, J.finite());
    for (auto& note : pattern.notes) rep.diagnostics.push_back(std::move(note));
    if (!pattern.ok) rep.violations.push_back("twist sign pattern: " + pattern.reason);

    const Phase theta = phase_from_weight(J.weight);
    if (theta.is_sign()) rep.theta_sign = theta.as_sign();

    std::optional<Phase> qdim = J.qdim;
    if (!qdim) {
        if (const auto* self = m.find_label(J.name)) qdim = self->qdim;
    }

    std::optional<Phase> from_ss;
    if (qdim) from_ss = braiding_from_spin_statistics(J.weight, *qdim);
    std::optional<OpeRoute> from_ope;
    if (J.ope) from_ope = qdim_from_ope_order(J.ope->lowest_weight, J.ope->leading_order);

    if (J.braiding) {
        rep.braiding_c = *J.braiding;
        rep.route = BraidingRoute::UserSupplied;
    } else if (from_ss) {
        rep.braiding_c = *from_ss;
        rep.route = BraidingRoute::SpinStatistics;
    } else if (from_ope) {
        rep.braiding_c = from_ope->braiding;
        rep.route = BraidingRoute::OpeOrder;
        qdim = from_ope->qdim;
        rep.diagnostics.push_back("qdim(J) inferred from the OPE leading order");
    }
    rep.qdim_J = qdim;

    if (!rep.braiding_c) {
        rep.diagnostics.push_back(
            "insufficient data to determine c_{J,J}: supply a braiding, qdim, or OPE data");
        return rep;
    }
    rep.diagnostics.push_back("c_{J,J} = " + rep.braiding_c->to_string() + " via " +
                              to_string(rep.route));

    if (from_ss && *from_ss != *rep.braiding_c) {
        rep.violations.push_back("spin-statistics gives c_{J,J} = " + from_ss->to_string() +
                                 " but the chosen value is " + rep.braiding_c->to_string());
    }
    if (from_ope) {
        if (J.ope->lowest_weight != J.weight) {
            rep.violations.push_back("OPE lowest weight " + J.ope->lowest_weight.to_string() +
                                     " differs from h_J = " + J.weight.to_string());
        }
        if (from_ope->braiding != *rep.braiding_c) {
            rep.violations.push_back("OPE order gives c_{J,J} = " + from_ope->braiding.to_string() +
                                     " but the chosen value is " + rep.braiding_c->to_string());
        }
        if (J.qdim && from_ope->qdim != *J.qdim) {
            rep.violations.push_back("OPE order gives qdim = " + from_ope->qdim.to_string() +
                                     " but the model declares " + J.qdim->to_string());
        }
    }
    if (!balancing_check(J.weight, *rep.braiding_c)) {
        rep.violations.push_back("balancing fails: c^2 e^{4 pi i h_J} != 1");
    }

    const bool c_is_sign = rep.braiding_c->is_sign();
    if (!c_is_sign) {
        rep.violations.push_back("c_{J,J} = e^{2 pi i " + rep.braiding_c->to_string() +
                                 "} is not a sign; only c = +1 or -1 can be classified");
    } else if (J.finite() && *J.order % 2 == 1 && rep.braiding_c->as_sign() == -1) {
        rep.violations.push_back("odd order current with c_{J,J} = -1 is inconsistent");
    }

    if (c_is_sign && rep.braiding_c->as_sign() == -1) {
        for (std::size_t k = 1; k < rep.sectors.size(); k += 2) rep.sectors[k].parity = 1;
    }

    if (rep.violations.empty() && rep.theta_sign && c_is_sign) {
        rep.parity = classify_extension(*rep.theta_sign, rep.braiding_c->as_sign());
    }
    return rep;
}

}  // namespace scext
