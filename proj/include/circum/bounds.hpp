#pragma once

// Lower bounds on the circumference, all evaluated in exact rationals.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circum/errors.hpp"
#include "circum/invariants.hpp"
#include "circum/rational.hpp"

namespace circum {

inline Rational bound_theorem1(int delta, int kappa, int cbar) {
    if (cbar < 1) throw PreconditionError("theorem1 bound needs a defined residual circumference (cbar >= 1)");
    if (delta < 0 || kappa < 0) throw PreconditionError("theorem1 bound needs delta, kappa >= 0");
    const std::int64_t c = cbar, k = kappa, d = delta;
    if (cbar >= kappa) return Rational((c + 1) * k * (d + 2), c + k + 1);
    return Rational((c + 1) * c * (d + 2), 2 * c + 1);
}

inline Rational bound_dirac(int delta) { return Rational(delta + 1); }

inline Rational bound_dirac2(int n, int delta) { return Rational(std::min(n, 2 * delta)); }

inline Rational bound_theoremD(int n, int delta, int kappa) { return Rational(std::min(n, 3 * delta - kappa)); }

inline Rational bound_theoremE(int delta, int pbar) {
    if (pbar < -1) throw PreconditionError("pbar must be >= -1");
    return Rational(static_cast<std::int64_t>(pbar + 2) * (delta - pbar));
}

inline Rational bound_theoremF(int delta, int cbar) {
    if (cbar < 1) throw PreconditionError("cbar must be >= 1");
    return Rational(static_cast<std::int64_t>(cbar + 1) * (delta - cbar + 1));
}

/// nullopt when the formula is vacuous (empty residual with kappa >= 1).
inline std::optional<Rational> bound_conjecture1(int delta, int kappa, int pbar) {
    if (pbar < -1) throw PreconditionError("pbar must be >= -1");
    const std::int64_t p = pbar, k = kappa, d = delta;
    if (pbar >= kappa - 1) return Rational((p + 2) * k * (d + 2), p + k + 2);
    if (pbar == -1) return std::nullopt;
    return Rational((p + 2) * p * (d + 2), 2 * p + 2);
}

using Conjecture1Formula = std::function<std::optional<Rational>(int delta, int kappa, int pbar)>;

struct BoundEntry {
    std::string name;
    bool applicable = false;
    std::string reason;  // why inapplicable
    Rational value;
    bool satisfied = true;
    Rational slack;  // c - value
};

struct TheoremCResult {
    bool applicable = false;
    std::string reason;
    bool determined = true;  // false when the second disjunct could not be enumerated
    bool first = false;      // c >= 3*delta - 3
    bool second = false;     // every longest cycle is dominating
    bool violation() const { return applicable && determined && !first && !second; }
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    std::optional<TheoremCResult> theoremC;

    const BoundEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

/// Names of the numeric bounds, in report order.
inline const std::vector<std::string>& bound_names() {
    static const std::vector<std::string> names{"theorem1", "dirac",    "dirac2",     "theoremD",
                                                "theoremE", "theoremF", "conjecture1"};
    return names;
}

/// The dichotomy: c >= 3δ-3, or each longest cycle dominates.
/// `all_cycles` may be empty when the graph is above the enumeration cap.
inline TheoremCResult check_theoremC(const Graph& g, const InvariantProfile& p,
                                     const std::vector<CycleWitness>* all_cycles) {
    TheoremCResult r;
    if (p.kappa < 3) {
        r.reason = "connectivity below 3";
        return r;
    }
    r.applicable = true;
    r.first = p.c >= 3 * p.delta - 3;
    if (!all_cycles) {
        r.determined = r.first;
        return r;
    }
    r.second = std::all_of(all_cycles->begin(), all_cycles->end(),
                           [&](const CycleWitness& c) { return is_dominating_cycle(g, c); });
    return r;
}

inline BoundReport evaluate_all(const InvariantProfile& p, const Conjecture1Formula& conjecture = bound_conjecture1) {
    BoundReport report;
    const Rational c(p.c);
    auto add = [&](std::string name, std::optional<Rational> value, std::string reason) {
        BoundEntry e;
        e.name = std::move(name);
        if (value) {
            e.applicable = true;
            e.value = *value;
            e.slack = c - *value;
            e.satisfied = e.slack >= Rational(0);
        } else {
            e.reason = std::move(reason);
        }
        report.entries.push_back(std::move(e));
    };
    const bool has_cbar = p.cbar.has_value();
    add("theorem1", has_cbar ? std::optional(bound_theorem1(p.delta, p.kappa, *p.cbar)) : std::nullopt,
        "residual empty (Hamiltonian)");
    add("dirac", bound_dirac(p.delta), "");
    add("dirac2", p.kappa >= 2 ? std::optional(bound_dirac2(p.n, p.delta)) : std::nullopt, "not 2-connected");
    add("theoremD", p.kappa >= 2 ? std::optional(bound_theoremD(p.n, p.delta, p.kappa)) : std::nullopt,
        "not 2-connected");
    add("theoremE", bound_theoremE(p.delta, p.pbar), "");
    add("theoremF", has_cbar ? std::optional(bound_theoremF(p.delta, *p.cbar)) : std::nullopt,
        "residual empty (Hamiltonian)");
    add("conjecture1", conjecture(p.delta, p.kappa, p.pbar), "vacuous for empty residual");
    return report;
}

}  // namespace circum
